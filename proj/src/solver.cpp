#include "orclique/solver.hpp"

#include <algorithm>

#include "orclique/decomposition.hpp"

namespace orclique {

namespace {

enum class Search { Found, NotFound, Budget };

struct BranchState {
    const Graph& g;
    std::uint64_t nodes = 0;
    std::optional<std::uint64_t> limit;

    std::vector<int> intersect_neighbors(const std::vector<int>& cand, int w) const {
        std::vector<int> out;
        auto nbrs = g.neighbors(w);
        std::set_intersection(cand.begin(), cand.end(), nbrs.begin(), nbrs.end(),
                              std::back_inserter(out));
        return out;
    }

    // Does `cand` (pairwise extendable candidates) contain a clique of size
    // `need`?
    Search expand(std::vector<int> cand, int need) {
        if (++nodes; limit && nodes > *limit)
            return Search::Budget;
        if (need == 0)
            return Search::Found;
        if (static_cast<int>(cand.size()) < need)
            return Search::NotFound;

        // Pivot on the candidate with most candidate neighbors; only
        // branches outside its neighborhood can start a maximal clique.
        int pivot = -1, best = -1;
        for (int u : cand) {
            int cnt = 0;
            auto nbrs = g.neighbors(u);
            auto it = nbrs.begin();
            for (int x : cand) {
                it = std::lower_bound(it, nbrs.end(), x);
                if (it != nbrs.end() && *it == x)
                    ++cnt, ++it;
            }
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
        std::vector<int> ext;
        {
            auto nbrs = g.neighbors(pivot);
            std::set_difference(cand.begin(), cand.end(), nbrs.begin(), nbrs.end(),
                                std::back_inserter(ext));
        }
        for (int w : ext) {
            auto r = expand(intersect_neighbors(cand, w), need - 1);
            if (r != Search::NotFound)
                return r;
            cand.erase(std::lower_bound(cand.begin(), cand.end(), w));
            if (static_cast<int>(cand.size()) < need)
                break;
        }
        return Search::NotFound;
    }
};

} // namespace

SolveResult has_clique(const CliqueInstance& inst, SolveBudget budget) {
    const Graph& g = inst.graph;
    int k = inst.k;
    if (k <= 1)
        return g.vertex_count() >= 1 ? SolveResult::Yes : SolveResult::No;
    if (k == 2)
        return g.edge_count() >= 1 ? SolveResult::Yes : SolveResult::No;
    if (k > g.vertex_count())
        return SolveResult::No;

    auto ord = degeneracy_ordering(g);
    if (ord.degeneracy + 1 < k)
        return SolveResult::No;
    auto pos = order_positions(ord);

    BranchState state{g, 0, budget.node_limit};
    for (int v : ord.order) {
        std::vector<int> cand;
        for (int u : g.neighbors(v))
            if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)])
                cand.push_back(u);
        if (static_cast<int>(cand.size()) + 1 < k)
            continue;
        switch (state.expand(std::move(cand), k - 1)) {
        case Search::Found:
            return SolveResult::Yes;
        case Search::Budget:
            return SolveResult::BudgetExceeded;
        case Search::NotFound:
            break;
        }
    }
    return SolveResult::No;
}

namespace {

bool extend_by_id(const Graph& g, const std::vector<int>& cand, int need) {
    if (need == 0)
        return true;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        int v = cand[i];
        std::vector<int> next;
        auto nbrs = g.neighbors(v);
        for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (std::binary_search(nbrs.begin(), nbrs.end(), cand[j]))
                next.push_back(cand[j]);
        if (extend_by_id(g, next, need - 1))
            return true;
    }
    return false;
}

} // namespace

bool brute_force_has_clique(const CliqueInstance& inst) {
    const Graph& g = inst.graph;
    if (inst.k > g.vertex_count())
        return false;
    std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        all[static_cast<std::size_t>(v)] = v;
    return extend_by_id(g, all, inst.k);
}

} // namespace orclique
