#include "orclique/modulator.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "orclique/decomposition.hpp"
#include "orclique/errors.hpp"

namespace orclique {

bool certify_modulator(const Graph& g, const Modulator& m) {
    auto rest = set_complement(m.vertices);
    auto [h, map] = induced_subgraph(g, rest);
    switch (m.target_class) {
    case ModulatorClass::Bipartite:
        return is_bipartite(h).bipartite;
    case ModulatorClass::BoundedDegree: {
        for (int v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) > m.degree_bound)
                return false;
        return true;
    }
    case ModulatorClass::Chordal:
        return chordality_check(h).chordal;
    }
    return false;
}

namespace {

constexpr int kInfCap = std::numeric_limits<int>::max() / 2;

// Small Edmonds-Karp max-flow with on-the-fly construction per compression
// partition. Node ids are assigned by the caller.
struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNet(int nodes) : arcs(static_cast<std::size_t>(nodes)) {}

    void add(int from, int to, int cap) {
        arcs[static_cast<std::size_t>(from)].push_back(
            {to, cap, static_cast<int>(arcs[static_cast<std::size_t>(to)].size())});
        arcs[static_cast<std::size_t>(to)].push_back(
            {from, 0, static_cast<int>(arcs[static_cast<std::size_t>(from)].size()) - 1});
    }

    // Augments unit paths until none exists or `limit` would be exceeded;
    // returns the flow pushed.
    int max_flow(int s, int t, int limit) {
        int flow = 0;
        while (flow < limit) {
            std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});
            pred[static_cast<std::size_t>(s)] = {s, -1};
            std::deque<int> queue{s};
            while (!queue.empty() && pred[static_cast<std::size_t>(t)].first == -1) {
                int u = queue.front();
                queue.pop_front();
                const auto& out = arcs[static_cast<std::size_t>(u)];
                for (std::size_t i = 0; i < out.size(); ++i)
                    if (out[i].cap > 0 && pred[static_cast<std::size_t>(out[i].to)].first == -1) {
                        pred[static_cast<std::size_t>(out[i].to)] = {u, static_cast<int>(i)};
                        queue.push_back(out[i].to);
                    }
            }
            if (pred[static_cast<std::size_t>(t)].first == -1)
                break;
            for (int v = t; v != s;) {
                auto [u, i] = pred[static_cast<std::size_t>(v)];
                auto& a = arcs[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
                a.cap -= 1;
                arcs[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
                v = u;
            }
            ++flow;
        }
        return flow;
    }

    std::vector<bool> source_side(int s) const {
        std::vector<bool> reach(arcs.size(), false);
        reach[static_cast<std::size_t>(s)] = true;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const auto& a : arcs[static_cast<std::size_t>(u)])
                if (a.cap > 0 && !reach[static_cast<std::size_t>(a.to)]) {
                    reach[static_cast<std::size_t>(a.to)] = true;
                    queue.push_back(a.to);
                }
        }
        return reach;
    }
};

// State for one compression round: the prefix graph G[0..limit], a
// transversal `xset` of it, and the bipartite remainder F.
struct Compression {
    const Graph& g;
    int limit; // vertices 0..limit are active
    std::vector<int> xset;
    std::vector<int> fverts;
    std::vector<int> fcolor;   // 2-coloring of G[F], indexed by vertex id
    std::vector<int> flocal;   // vertex id -> local index in fverts, or -1
    std::vector<std::vector<int>> fadj; // local adjacency within F

    Compression(const Graph& graph, int lim, std::vector<int> x)
        : g(graph), limit(lim), xset(std::move(x)) {
        std::vector<bool> in_x(static_cast<std::size_t>(g.vertex_count()), false);
        for (int v : xset)
            in_x[static_cast<std::size_t>(v)] = true;
        flocal.assign(static_cast<std::size_t>(g.vertex_count()), -1);
        for (int v = 0; v <= limit; ++v)
            if (!in_x[static_cast<std::size_t>(v)]) {
                flocal[static_cast<std::size_t>(v)] = static_cast<int>(fverts.size());
                fverts.push_back(v);
            }
        fadj.resize(fverts.size());
        for (std::size_t i = 0; i < fverts.size(); ++i)
            for (int u : g.neighbors(fverts[i]))
                if (u <= limit && flocal[static_cast<std::size_t>(u)] >= 0)
                    fadj[i].push_back(flocal[static_cast<std::size_t>(u)]);

        // canonical 2-coloring of F, BFS from smallest local index
        fcolor.assign(fverts.size(), -1);
        for (std::size_t s = 0; s < fverts.size(); ++s) {
            if (fcolor[s] != -1)
                continue;
            fcolor[s] = 0;
            std::deque<int> queue{static_cast<int>(s)};
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int w : fadj[static_cast<std::size_t>(u)]) {
                    if (fcolor[static_cast<std::size_t>(w)] == -1) {
                        fcolor[static_cast<std::size_t>(w)] = 1 - fcolor[static_cast<std::size_t>(u)];
                        queue.push_back(w);
                    } else if (fcolor[static_cast<std::size_t>(w)] ==
                               fcolor[static_cast<std::size_t>(u)]) {
                        throw InvariantError("compression remainder is not bipartite");
                    }
                }
            }
        }
    }

    // Evaluates one delete/left/right assignment of xset. Returns the
    // minimum transversal size consistent with it (or best_bound if that
    // can't be beaten); fills `solution` when asked.
    int evaluate(const std::vector<int>& digit, int best_bound, std::vector<int>* solution) const {
        int s = static_cast<int>(xset.size());
        int deletions = 0;
        for (int i = 0; i < s; ++i)
            if (digit[static_cast<std::size_t>(i)] == 0)
                ++deletions;
        if (deletions >= best_bound && !solution)
            return best_bound;

        // same-side pairs inside the kept transversal are forbidden
        for (int i = 0; i < s; ++i) {
            if (digit[static_cast<std::size_t>(i)] == 0)
                continue;
            for (int j = i + 1; j < s; ++j)
                if (digit[static_cast<std::size_t>(j)] == digit[static_cast<std::size_t>(i)] &&
                    g.adjacent(xset[static_cast<std::size_t>(i)], xset[static_cast<std::size_t>(j)]))
                    return best_bound;
        }

        // Phase of a remainder vertex = its canonical color XOR the side it
        // is forced to; separating opposite phases is a vertex cut problem.
        int fn = static_cast<int>(fverts.size());
        std::vector<int> phase(static_cast<std::size_t>(fn), -1); // -1 free, 2 forced delete
        int forced = 0;
        for (int i = 0; i < s; ++i) {
            if (digit[static_cast<std::size_t>(i)] == 0)
                continue;
            int side = digit[static_cast<std::size_t>(i)] == 1 ? 1 : 0; // neighbor goes opposite
            for (int u : g.neighbors(xset[static_cast<std::size_t>(i)])) {
                if (u > limit)
                    continue;
                int lu = flocal[static_cast<std::size_t>(u)];
                if (lu < 0)
                    continue;
                int want = fcolor[static_cast<std::size_t>(lu)] ^ side;
                auto& ph = phase[static_cast<std::size_t>(lu)];
                if (ph == -1)
                    ph = want;
                else if (ph != want && ph != 2) {
                    ph = 2;
                    ++forced;
                }
            }
        }
        if (deletions + forced >= best_bound && !solution)
            return best_bound;

        FlowNet net(2 * fn + 2);
        int src = 2 * fn, sink = 2 * fn + 1;
        for (int i = 0; i < fn; ++i) {
            if (phase[static_cast<std::size_t>(i)] == 2)
                continue;
            net.add(2 * i, 2 * i + 1, 1);
            if (phase[static_cast<std::size_t>(i)] == 0)
                net.add(src, 2 * i, kInfCap);
            else if (phase[static_cast<std::size_t>(i)] == 1)
                net.add(2 * i + 1, sink, kInfCap);
        }
        for (int i = 0; i < fn; ++i) {
            if (phase[static_cast<std::size_t>(i)] == 2)
                continue;
            for (int j : fadj[static_cast<std::size_t>(i)])
                if (phase[static_cast<std::size_t>(j)] != 2)
                    net.add(2 * i + 1, 2 * j, kInfCap);
        }
        int room = solution ? fn + 1 : best_bound - deletions - forced;
        int flow = net.max_flow(src, sink, room);
        int total = deletions + forced + flow;
        if (!solution)
            return std::min(total, best_bound);

        auto reach = net.source_side(src);
        solution->clear();
        for (int i = 0; i < s; ++i)
            if (digit[static_cast<std::size_t>(i)] == 0)
                solution->push_back(xset[static_cast<std::size_t>(i)]);
        for (int i = 0; i < fn; ++i) {
            if (phase[static_cast<std::size_t>(i)] == 2)
                solution->push_back(fverts[static_cast<std::size_t>(i)]);
            else if (reach[static_cast<std::size_t>(2 * i)] && !reach[static_cast<std::size_t>(2 * i + 1)])
                solution->push_back(fverts[static_cast<std::size_t>(i)]);
        }
        std::sort(solution->begin(), solution->end());
        return total;
    }
};

bool prefix_minus_set_bipartite(const Graph& g, int limit, const std::vector<int>& x) {
    std::vector<bool> skip(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : x)
        skip[static_cast<std::size_t>(v)] = true;
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int s = 0; s <= limit; ++s) {
        if (skip[static_cast<std::size_t>(s)] || color[static_cast<std::size_t>(s)] != -1)
            continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (w > limit || skip[static_cast<std::size_t>(w)])
                    continue;
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

OctResult oct_exact(const Graph& g, int budget, std::uint64_t step_cap) {
    if (budget < 0)
        throw ValidationError("negative budget");
    int n = g.vertex_count();
    std::vector<int> x; // minimum transversal of G[0..v]
    std::uint64_t steps = 0;
    for (int v = 0; v < n; ++v) {
        if (prefix_minus_set_bipartite(g, v, x))
            continue;
        std::vector<int> xprime = x;
        xprime.push_back(v);
        std::sort(xprime.begin(), xprime.end());
        Compression comp(g, v, xprime);

        int s = static_cast<int>(xprime.size());
        std::uint64_t codes = 1;
        for (int i = 0; i < s; ++i)
            codes *= 3;
        int best = s; // the all-delete partition realizes |xprime|
        std::uint64_t best_code = 0;
        std::vector<int> digit(static_cast<std::size_t>(s), 0);
        for (std::uint64_t code = 0; code < codes; ++code) {
            if (++steps > step_cap)
                return {OctStatus::Abort, {}};
            std::uint64_t rem = code;
            for (int i = 0; i < s; ++i) {
                digit[static_cast<std::size_t>(i)] = static_cast<int>(rem % 3);
                rem /= 3;
            }
            int value = comp.evaluate(digit, best, nullptr);
            if (value < best) {
                best = value;
                best_code = code;
            }
        }
        if (best > budget)
            return {OctStatus::NoneWithin, {}};

        std::uint64_t rem = best_code;
        for (int i = 0; i < s; ++i) {
            digit[static_cast<std::size_t>(i)] = static_cast<int>(rem % 3);
            rem /= 3;
        }
        std::vector<int> solution;
        int realized = comp.evaluate(digit, n + 1, &solution);
        if (realized != best || static_cast<int>(solution.size()) != best)
            throw InvariantError("compression reconstruction mismatch");
        x = std::move(solution);
    }

    Modulator m{VertexSet::of(x, n), ModulatorClass::Bipartite, 0, ModulatorMethod::Exact};
    if (!certify_modulator(g, m))
        throw InvariantError("exact transversal failed certification");
    return {OctStatus::Found, std::move(m)};
}

Modulator oct_heuristic(const Graph& g) {
    int n = g.vertex_count();
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    std::vector<int> removed;
    while (true) {
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (alive[static_cast<std::size_t>(v)])
                rest.push_back(v);
        auto [h, map] = induced_subgraph(g, VertexSet::of(rest, n));
        auto bip = is_bipartite(h);
        if (bip.bipartite)
            break;
        int pick = -1, pick_deg = -1;
        for (int local : bip.odd_cycle) {
            int v = map[static_cast<std::size_t>(local)];
            int deg = h.degree(local);
            if (deg > pick_deg || (deg == pick_deg && v < pick)) {
                pick = v;
                pick_deg = deg;
            }
        }
        alive[static_cast<std::size_t>(pick)] = false;
        removed.push_back(pick);
    }
    return Modulator{VertexSet::of(removed, n), ModulatorClass::Bipartite, 0,
                     ModulatorMethod::Greedy};
}

BoundedDegreeResult bounded_degree_modulator(const Graph& g, int d, int p) {
    if (d < 0 || p < 0)
        throw ValidationError("negative parameter");
    int n = g.vertex_count();

    std::vector<int> forced;
    std::vector<bool> in_forced(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= p + d + 1) {
            forced.push_back(v);
            in_forced[static_cast<std::size_t>(v)] = true;
        }
    if (static_cast<int>(forced.size()) > p)
        return {false, {}};

    // degrees in G - forced
    std::vector<int> high;
    for (int v = 0; v < n; ++v) {
        if (in_forced[static_cast<std::size_t>(v)])
            continue;
        int deg = 0;
        for (int u : g.neighbors(v))
            if (!in_forced[static_cast<std::size_t>(u)])
                ++deg;
        if (deg > d)
            high.push_back(v);
    }
    long long room = static_cast<long long>(p - static_cast<int>(forced.size())) * (p + d + 1);
    if (static_cast<long long>(high.size()) > room)
        return {false, {}};

    std::vector<int> x = forced;
    x.insert(x.end(), high.begin(), high.end());
    Modulator m{VertexSet::of(std::move(x), n), ModulatorClass::BoundedDegree, d,
                ModulatorMethod::Approx};
    if (!certify_modulator(g, m))
        throw InvariantError("bounded-degree modulator failed certification");
    return {true, std::move(m)};
}

Modulator chordal_modulator_greedy(const Graph& g) {
    int n = g.vertex_count();
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    std::vector<int> removed;
    while (true) {
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (alive[static_cast<std::size_t>(v)])
                rest.push_back(v);
        auto [h, map] = induced_subgraph(g, VertexSet::of(rest, n));
        auto res = chordality_check(h);
        if (res.chordal)
            break;
        int pick = -1, pick_deg = -1;
        for (int local : res.hole) {
            int v = map[static_cast<std::size_t>(local)];
            int deg = h.degree(local);
            if (deg > pick_deg || (deg == pick_deg && v < pick)) {
                pick = v;
                pick_deg = deg;
            }
        }
        alive[static_cast<std::size_t>(pick)] = false;
        removed.push_back(pick);
    }
    return Modulator{VertexSet::of(removed, n), ModulatorClass::Chordal, 0,
                     ModulatorMethod::Greedy};
}

} // namespace orclique
