#include "orclique/kernel.hpp"

#include <algorithm>
#include <bit>

#include "orclique/decomposition.hpp"
#include "orclique/errors.hpp"
#include "orclique/modulator.hpp"
#include "orclique/solver.hpp"

namespace orclique {

namespace {

Query make_induced_query(const CliqueInstance& inst, const VertexSet& s, std::string note) {
    auto [sub, map] = induced_subgraph(inst.graph, s);
    return Query{CliqueInstance{std::move(sub), inst.k}, std::move(map), std::move(note)};
}

} // namespace

QuerySet kernel_degeneracy(const CliqueInstance& inst) {
    QuerySet qs;
    qs.parameter_name = "degeneracy";
    auto ord = degeneracy_ordering(inst.graph);
    qs.parameter_value = ord.degeneracy;
    for (int v : ord.order) {
        auto s = later_closed_neighborhood(inst.graph, ord, v);
        qs.queries.push_back(make_induced_query(inst, s, "v=" + std::to_string(v)));
    }
    return qs;
}

QuerySet oct_queries_with_modulator(const CliqueInstance& inst, const VertexSet& transversal) {
    const Graph& g = inst.graph;
    QuerySet qs;
    qs.parameter_name = "oct";
    qs.parameter_value = transversal.size();

    auto rest = set_complement(transversal);
    auto [h, map] = induced_subgraph(g, rest);
    for (auto [a, b] : h.edges()) {
        int u = map[static_cast<std::size_t>(a)], v = map[static_cast<std::size_t>(b)];
        auto s = set_union(transversal, VertexSet::of({u, v}, g.vertex_count()));
        qs.queries.push_back(
            make_induced_query(inst, s, "e=" + std::to_string(u) + "-" + std::to_string(v)));
    }
    for (int a = 0; a < h.vertex_count(); ++a) {
        if (h.degree(a) != 0)
            continue;
        int v = map[static_cast<std::size_t>(a)];
        auto s = set_union(transversal, VertexSet::of({v}, g.vertex_count()));
        qs.queries.push_back(make_induced_query(inst, s, "isolated=" + std::to_string(v)));
    }
    if (h.vertex_count() == 0 && g.vertex_count() > 0)
        qs.queries.push_back(make_induced_query(inst, transversal, "X"));
    return qs;
}

QuerySet kernel_oct(const CliqueInstance& inst) {
    long long n = encoding_size(inst.graph);
    int budget = n <= 1 ? 0 : std::bit_width(static_cast<std::uint64_t>(n - 1));
    auto exact = oct_exact(inst.graph, budget);
    if (exact.status == OctStatus::Found) {
        QuerySet qs;
        qs.parameter_name = "oct";
        qs.parameter_value = exact.modulator.vertices.size();
        qs.immediate_answer = has_clique(inst) == SolveResult::Yes;
        return qs;
    }
    return oct_queries_with_modulator(inst, oct_heuristic(inst.graph).vertices);
}

QuerySet kernel_bounded_degree(const CliqueInstance& inst, int d) {
    const Graph& g = inst.graph;
    QuerySet qs;
    qs.parameter_name = "dbd";

    BoundedDegreeResult found;
    for (int p = 0;; ++p) {
        found = bounded_degree_modulator(g, d, p);
        if (found.found)
            break;
        if (p > g.vertex_count())
            throw InvariantError("bounded-degree modulator search did not terminate");
    }
    const VertexSet& x = found.modulator.vertices;
    qs.parameter_value = x.size();

    auto rest = set_complement(x);
    auto [h, map] = induced_subgraph(g, rest);
    if (h.vertex_count() == 0) {
        qs.queries.push_back(make_induced_query(inst, x, "X"));
        return qs;
    }
    for (int a = 0; a < h.vertex_count(); ++a) {
        std::vector<int> ids{map[static_cast<std::size_t>(a)]};
        for (int b : h.neighbors(a))
            ids.push_back(map[static_cast<std::size_t>(b)]);
        auto s = set_union(x, VertexSet::of(std::move(ids), g.vertex_count()));
        qs.queries.push_back(
            make_induced_query(inst, s, "v=" + std::to_string(map[static_cast<std::size_t>(a)])));
    }
    return qs;
}

QuerySet kernel_chordal(const CliqueInstance& inst) {
    const Graph& g = inst.graph;
    QuerySet qs;
    qs.parameter_name = "chordal";
    if (g.vertex_count() == 0) {
        qs.immediate_answer = false;
        return qs;
    }

    auto x = chordal_modulator_greedy(g).vertices;
    qs.parameter_value = x.size();
    auto rest = set_complement(x);
    auto [h, map] = induced_subgraph(g, rest);
    if (h.vertex_count() == 0) {
        qs.queries.push_back(make_induced_query(inst, x, "X"));
        return qs;
    }

    auto chord = chordality_check(h);
    if (!chord.chordal)
        throw InvariantError("residual of chordal modulator is not chordal");
    const auto& sigma = chord.peo.order;
    std::vector<int> pos(static_cast<std::size_t>(h.vertex_count()));
    for (std::size_t i = 0; i < sigma.size(); ++i)
        pos[static_cast<std::size_t>(sigma[i])] = static_cast<int>(i);

    for (int v : sigma) {
        std::vector<int> closed{v};
        for (int u : h.neighbors(v))
            if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)])
                closed.push_back(u);
        if (static_cast<int>(closed.size()) >= inst.k) {
            // N+[v] induces a clique of size k in G already.
            QuerySet immediate;
            immediate.parameter_name = qs.parameter_name;
            immediate.parameter_value = qs.parameter_value;
            immediate.immediate_answer = true;
            return immediate;
        }
        std::vector<int> ids;
        ids.reserve(closed.size());
        for (int u : closed)
            ids.push_back(map[static_cast<std::size_t>(u)]);
        auto s = set_union(x, VertexSet::of(std::move(ids), g.vertex_count()));
        qs.queries.push_back(
            make_induced_query(inst, s, "v=" + std::to_string(map[static_cast<std::size_t>(v)])));
    }
    return qs;
}

QuerySet kernel_longest_odd_cycle(const CliqueInstance& inst) {
    const Graph& g = inst.graph;
    QuerySet qs;
    qs.parameter_name = "loc";
    if (inst.k == 1) {
        qs.immediate_answer = g.vertex_count() >= 1;
        return qs;
    }
    if (inst.k == 2) {
        qs.immediate_answer = g.edge_count() >= 1;
        return qs;
    }

    auto blocks = block_decomposition(g);
    for (std::size_t i = 0; i < blocks.blocks.size(); ++i) {
        auto [block, map] = induced_subgraph(g, blocks.blocks[i]);
        if (is_bipartite(block).bipartite)
            continue;
        auto td = reduce_bag_count(heuristic_tree_decomposition(block), block);
        for (std::size_t j = 0; j < td.bags.size(); ++j) {
            const auto& bag = td.bags[j];
            qs.parameter_value = std::max(qs.parameter_value, static_cast<long long>(bag.size()));
            std::vector<int> ids;
            ids.reserve(bag.members.size());
            for (int u : bag.members)
                ids.push_back(map[static_cast<std::size_t>(u)]);
            auto s = VertexSet::of(std::move(ids), g.vertex_count());
            qs.queries.push_back(make_induced_query(
                inst, s, "block=" + std::to_string(i) + " bag=" + std::to_string(j)));
        }
    }
    if (qs.queries.empty())
        qs.immediate_answer = false; // all blocks bipartite: no triangle anywhere
    return qs;
}

} // namespace orclique
