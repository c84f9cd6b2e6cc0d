#include "orclique/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <ostream>
#include <queue>

#include "orclique/errors.hpp"

namespace orclique {

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    using Entry = std::pair<int, int>; // (degree, vertex)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        heap.emplace(deg[static_cast<std::size_t>(v)], v);
    }
    DegeneracyOrdering out;
    out.order.reserve(static_cast<std::size_t>(n));
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (removed[static_cast<std::size_t>(v)] || d != deg[static_cast<std::size_t>(v)])
            continue; // stale entry
        removed[static_cast<std::size_t>(v)] = true;
        out.order.push_back(v);
        out.degeneracy = std::max(out.degeneracy, d);
        for (int u : g.neighbors(v))
            if (!removed[static_cast<std::size_t>(u)]) {
                --deg[static_cast<std::size_t>(u)];
                heap.emplace(deg[static_cast<std::size_t>(u)], u);
            }
    }
    return out;
}

std::vector<int> order_positions(const DegeneracyOrdering& ord) {
    std::vector<int> pos(ord.order.size());
    for (std::size_t i = 0; i < ord.order.size(); ++i)
        pos[static_cast<std::size_t>(ord.order[i])] = static_cast<int>(i);
    return pos;
}

VertexSet later_closed_neighborhood(const Graph& g, const DegeneracyOrdering& ord, int v) {
    auto pos = order_positions(ord);
    std::vector<int> ids{v};
    for (int u : g.neighbors(v))
        if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)])
            ids.push_back(u);
    return VertexSet::of(std::move(ids), g.vertex_count());
}

BipartitenessResult is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    BipartitenessResult res;
    res.coloring.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (res.coloring[static_cast<std::size_t>(s)] != -1)
            continue;
        res.coloring[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (res.coloring[static_cast<std::size_t>(w)] == -1) {
                    res.coloring[static_cast<std::size_t>(w)] =
                        1 - res.coloring[static_cast<std::size_t>(u)];
                    parent[static_cast<std::size_t>(w)] = u;
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                } else if (res.coloring[static_cast<std::size_t>(w)] ==
                           res.coloring[static_cast<std::size_t>(u)]) {
                    // Odd cycle through the BFS-tree paths of u and w.
                    std::vector<int> left{u}, right{w};
                    int a = u, b = w;
                    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)])
                        left.push_back(a = parent[static_cast<std::size_t>(a)]);
                    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)])
                        right.push_back(b = parent[static_cast<std::size_t>(b)]);
                    while (a != b) {
                        left.push_back(a = parent[static_cast<std::size_t>(a)]);
                        right.push_back(b = parent[static_cast<std::size_t>(b)]);
                    }
                    res.odd_cycle.assign(left.begin(), left.end());
                    for (auto it = right.rbegin() + 1; it != right.rend(); ++it)
                        res.odd_cycle.push_back(*it);
                    res.bipartite = false;
                    res.coloring.clear();
                    return res;
                }
            }
        }
    }
    res.bipartite = true;
    return res;
}

BlockDecomposition block_decomposition(const Graph& g) {
    int n = g.vertex_count();
    BlockDecomposition out;
    out.cut_vertices.host_vertex_count = n;
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        std::size_t idx;
    };

    auto emit_block = [&](int u, int v) {
        std::vector<int> verts;
        while (true) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(a);
            verts.push_back(b);
            if (a == u && b == v)
                break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        out.blocks.push_back(VertexSet{std::move(verts), n});
    };

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1)
            continue;
        if (g.degree(root) == 0) {
            disc[static_cast<std::size_t>(root)] = timer++;
            out.blocks.push_back(VertexSet{{root}, n});
            continue;
        }
        int root_children = 0;
        std::vector<Frame> frames{{root, -1, 0}};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto nbrs = g.neighbors(f.v);
            if (f.idx < nbrs.size()) {
                int w = nbrs[f.idx++];
                if (w == f.parent)
                    continue;
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    edge_stack.emplace_back(f.v, w);
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    if (f.v == root)
                        ++root_children;
                    frames.push_back({w, f.v, 0});
                } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
                    edge_stack.emplace_back(f.v, w);
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)],
                                 disc[static_cast<std::size_t>(w)]);
                }
            } else {
                int v = f.v, p = f.parent;
                frames.pop_back();
                if (p == -1)
                    break;
                low[static_cast<std::size_t>(p)] =
                    std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) {
                    emit_block(p, v);
                    if (p != root)
                        is_cut[static_cast<std::size_t>(p)] = true;
                }
            }
        }
        if (root_children >= 2)
            is_cut[static_cast<std::size_t>(root)] = true;
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[static_cast<std::size_t>(v)])
            out.cut_vertices.members.push_back(v);
    return out;
}

namespace {

// Lexicographic BFS visit order; ties broken by smallest id.
std::vector<int> lex_bfs(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (visited[static_cast<std::size_t>(v)])
                continue;
            if (pick == -1 || label[static_cast<std::size_t>(v)] > label[static_cast<std::size_t>(pick)])
                pick = v;
        }
        visited[static_cast<std::size_t>(pick)] = true;
        order.push_back(pick);
        for (int u : g.neighbors(pick))
            if (!visited[static_cast<std::size_t>(u)])
                label[static_cast<std::size_t>(u)].push_back(n - t);
    }
    return order;
}

// Shortest chordless cycle certificate: a vertex v with nonadjacent
// neighbors u, w joined by a path avoiding the rest of N[v] closes an
// induced cycle of length >= 4. Some such triple admits a path whenever the
// graph is not chordal.
std::vector<int> find_hole(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        auto nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                int u = nbrs[i], w = nbrs[j];
                if (g.adjacent(u, w))
                    continue;
                std::vector<bool> blocked(static_cast<std::size_t>(n), false);
                blocked[static_cast<std::size_t>(v)] = true;
                for (int x : nbrs)
                    blocked[static_cast<std::size_t>(x)] = true;
                blocked[static_cast<std::size_t>(u)] = false;
                blocked[static_cast<std::size_t>(w)] = false;
                std::vector<int> parent(static_cast<std::size_t>(n), -2);
                std::deque<int> queue{u};
                parent[static_cast<std::size_t>(u)] = -1;
                while (!queue.empty() && parent[static_cast<std::size_t>(w)] == -2) {
                    int x = queue.front();
                    queue.pop_front();
                    for (int y : g.neighbors(x)) {
                        if (blocked[static_cast<std::size_t>(y)] ||
                            parent[static_cast<std::size_t>(y)] != -2)
                            continue;
                        parent[static_cast<std::size_t>(y)] = x;
                        queue.push_back(y);
                    }
                }
                if (parent[static_cast<std::size_t>(w)] == -2)
                    continue;
                std::vector<int> hole{v};
                std::vector<int> path;
                for (int x = w; x != -1; x = parent[static_cast<std::size_t>(x)])
                    path.push_back(x);
                for (auto it = path.rbegin(); it != path.rend(); ++it)
                    hole.push_back(*it);
                return hole;
            }
        }
    }
    throw InvariantError("no chordless cycle found in a graph that failed the elimination check");
}

} // namespace

ChordalityResult chordality_check(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order = lex_bfs(g);
    std::reverse(order.begin(), order.end()); // candidate elimination order
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
        int first = -1;
        for (int u : g.neighbors(v))
            if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)] &&
                (first == -1 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(first)]))
                first = u;
        if (first == -1)
            continue;
        for (int w : g.neighbors(v))
            if (w != first && pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)] &&
                !g.adjacent(first, w)) {
                ok = false;
                break;
            }
    }

    ChordalityResult res;
    if (ok) {
        res.chordal = true;
        res.peo.order = std::move(order);
    } else {
        res.chordal = false;
        res.hole = find_hole(g);
    }
    return res;
}

int TreeDecomposition::width() const {
    int max_bag = 0;
    for (const auto& b : bags)
        max_bag = std::max(max_bag, b.size());
    return max_bag - 1;
}

namespace {

class BitMatrix {
public:
    BitMatrix(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64),
                       rows_(static_cast<std::size_t>(n) * words_, 0) {}

    void set(int r, int c) { rows_[idx(r, c)] |= bit(c); }
    void clear(int r, int c) { rows_[idx(r, c)] &= ~bit(c); }
    bool test(int r, int c) const { return rows_[idx(r, c)] & bit(c); }

    int common(int r1, int r2, const std::vector<std::uint64_t>& mask) const {
        int total = 0;
        const std::uint64_t* a = &rows_[static_cast<std::size_t>(r1) * words_];
        const std::uint64_t* b = &rows_[static_cast<std::size_t>(r2) * words_];
        for (std::size_t w = 0; w < words_; ++w)
            total += std::popcount(a[w] & b[w] & mask[w]);
        return total;
    }

    std::size_t words() const { return words_; }

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * words_ + static_cast<std::size_t>(c) / 64;
    }
    static std::uint64_t bit(int c) { return std::uint64_t{1} << (c % 64); }

    int n_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
};

} // namespace

TreeDecomposition heuristic_tree_decomposition(const Graph& g) {
    int n = g.vertex_count();
    TreeDecomposition td;
    if (n == 0)
        return td;

    BitMatrix adj(n);
    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        nbrs[static_cast<std::size_t>(v)].assign(g.neighbors(v).begin(), g.neighbors(v).end());
        for (int u : g.neighbors(v))
            adj.set(v, u);
    }
    std::vector<std::uint64_t> alive_mask(adj.words(), 0);
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    for (int v = 0; v < n; ++v)
        alive_mask[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);

    auto alive_neighbors = [&](int v) {
        std::vector<int> out;
        for (int u : nbrs[static_cast<std::size_t>(v)])
            if (alive[static_cast<std::size_t>(u)])
                out.push_back(u);
        return out;
    };

    std::vector<int> elim_pos(static_cast<std::size_t>(n), -1);
    std::vector<int> elim_order;
    elim_order.reserve(static_cast<std::size_t>(n));

    for (int step = 0; step < n; ++step) {
        int best = -1;
        long long best_fill = 0;
        int best_deg = 0;
        for (int v = 0; v < n; ++v) {
            if (!alive[static_cast<std::size_t>(v)])
                continue;
            auto an = alive_neighbors(v);
            int deg = static_cast<int>(an.size());
            long long pairs = static_cast<long long>(deg) * (deg - 1) / 2;
            long long present = 0;
            for (int u : an)
                present += adj.common(u, v, alive_mask);
            long long fill = pairs - present / 2;
            if (best == -1 || fill < best_fill ||
                (fill == best_fill && (deg < best_deg || (deg == best_deg && v < best)))) {
                best = v;
                best_fill = fill;
                best_deg = deg;
            }
        }

        auto bag_rest = alive_neighbors(best);
        std::vector<int> bag = bag_rest;
        bag.push_back(best);
        td.bags.push_back(VertexSet::of(std::move(bag), n));
        elim_pos[static_cast<std::size_t>(best)] = step;
        elim_order.push_back(best);

        for (std::size_t i = 0; i < bag_rest.size(); ++i)
            for (std::size_t j = i + 1; j < bag_rest.size(); ++j) {
                int a = bag_rest[i], b = bag_rest[j];
                if (!adj.test(a, b)) {
                    adj.set(a, b);
                    adj.set(b, a);
                    nbrs[static_cast<std::size_t>(a)].push_back(b);
                    nbrs[static_cast<std::size_t>(b)].push_back(a);
                }
            }
        alive[static_cast<std::size_t>(best)] = false;
        alive_mask[static_cast<std::size_t>(best) / 64] &= ~(std::uint64_t{1} << (best % 64));
    }

    // Bag of the i-th eliminated vertex attaches to the bag of its earliest
    // eliminated surviving neighbor; roots of the resulting forest are
    // chained to keep the decomposition a single tree.
    std::vector<int> roots;
    for (int step = 0; step < n; ++step) {
        int v = elim_order[static_cast<std::size_t>(step)];
        const auto& bag = td.bags[static_cast<std::size_t>(step)].members;
        int parent = -1;
        for (int u : bag)
            if (u != v && (parent == -1 ||
                           elim_pos[static_cast<std::size_t>(u)] < elim_pos[static_cast<std::size_t>(parent)]))
                parent = u;
        if (parent == -1)
            roots.push_back(step);
        else
            td.tree_edges.emplace_back(step, elim_pos[static_cast<std::size_t>(parent)]);
    }
    for (std::size_t i = 1; i < roots.size(); ++i)
        td.tree_edges.emplace_back(roots[i - 1], roots[i]);
    return td;
}

TreeDecomposition reduce_bag_count(const TreeDecomposition& td, const Graph& g) {
    auto check = validate_tree_decomposition(td, g);
    if (!check.valid)
        throw ValidationError("invalid tree decomposition: " + check.violation);
    if (g.vertex_count() == 0)
        return TreeDecomposition{};

    int b = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> bags;
    bags.reserve(static_cast<std::size_t>(b));
    for (const auto& bag : td.bags)
        bags.push_back(bag.members);
    std::vector<std::vector<int>> tree(static_cast<std::size_t>(b));
    for (auto [x, y] : td.tree_edges) {
        tree[static_cast<std::size_t>(x)].push_back(y);
        tree[static_cast<std::size_t>(y)].push_back(x);
    }
    std::vector<bool> dead(static_cast<std::size_t>(b), false);

    auto subset = [](const std::vector<int>& a, const std::vector<int>& c) {
        return std::includes(c.begin(), c.end(), a.begin(), a.end());
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < b && !changed; ++i) {
            if (dead[static_cast<std::size_t>(i)])
                continue;
            for (int j : tree[static_cast<std::size_t>(i)]) {
                if (dead[static_cast<std::size_t>(j)] || j <= i)
                    continue;
                int keep, drop;
                if (subset(bags[static_cast<std::size_t>(j)], bags[static_cast<std::size_t>(i)])) {
                    keep = i;
                    drop = j;
                } else if (subset(bags[static_cast<std::size_t>(i)], bags[static_cast<std::size_t>(j)])) {
                    keep = j;
                    drop = i;
                } else {
                    continue;
                }
                for (int x : tree[static_cast<std::size_t>(drop)])
                    if (x != keep) {
                        tree[static_cast<std::size_t>(keep)].push_back(x);
                        for (int& y : tree[static_cast<std::size_t>(x)])
                            if (y == drop)
                                y = keep;
                    }
                tree[static_cast<std::size_t>(drop)].clear();
                auto& kn = tree[static_cast<std::size_t>(keep)];
                kn.erase(std::remove(kn.begin(), kn.end(), drop), kn.end());
                dead[static_cast<std::size_t>(drop)] = true;
                changed = true;
                break;
            }
        }
    }

    TreeDecomposition out;
    std::vector<int> new_index(static_cast<std::size_t>(b), -1);
    for (int i = 0; i < b; ++i)
        if (!dead[static_cast<std::size_t>(i)]) {
            new_index[static_cast<std::size_t>(i)] = static_cast<int>(out.bags.size());
            out.bags.push_back(VertexSet{bags[static_cast<std::size_t>(i)], g.vertex_count()});
        }
    for (int i = 0; i < b; ++i)
        if (!dead[static_cast<std::size_t>(i)])
            for (int j : tree[static_cast<std::size_t>(i)])
                if (i < j)
                    out.tree_edges.emplace_back(new_index[static_cast<std::size_t>(i)],
                                                new_index[static_cast<std::size_t>(j)]);
    return out;
}

TdValidation validate_tree_decomposition(const TreeDecomposition& td, const Graph& g) {
    int n = g.vertex_count();
    int b = static_cast<int>(td.bags.size());

    for (int i = 0; i < b; ++i) {
        const auto& m = td.bags[static_cast<std::size_t>(i)].members;
        if (!std::is_sorted(m.begin(), m.end()) ||
            std::adjacent_find(m.begin(), m.end()) != m.end())
            return {false, "bag " + std::to_string(i) + " not a sorted set"};
        if (!m.empty() && (m.front() < 0 || m.back() >= n))
            return {false, "bag " + std::to_string(i) + " has vertex out of range"};
    }

    if (b == 0) {
        if (n > 0)
            return {false, "vertex 0 appears in no bag"};
        if (!td.tree_edges.empty())
            return {false, "tree: edges without bags"};
        return {true, ""};
    }

    // tree-ness: exactly b-1 distinct proper edges and connected
    if (static_cast<int>(td.tree_edges.size()) != b - 1)
        return {false, "tree: " + std::to_string(td.tree_edges.size()) + " edges for " +
                           std::to_string(b) + " bags"};
    std::vector<std::vector<int>> tree(static_cast<std::size_t>(b));
    std::vector<std::pair<int, int>> seen;
    for (auto [x, y] : td.tree_edges) {
        if (x < 0 || y < 0 || x >= b || y >= b)
            return {false, "tree: edge index out of range"};
        if (x == y)
            return {false, "tree: self-loop on bag " + std::to_string(x)};
        seen.push_back(std::minmax(x, y));
        tree[static_cast<std::size_t>(x)].push_back(y);
        tree[static_cast<std::size_t>(y)].push_back(x);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        return {false, "tree: duplicate edge"};
    {
        std::vector<bool> reach(static_cast<std::size_t>(b), false);
        std::deque<int> queue{0};
        reach[0] = true;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : tree[static_cast<std::size_t>(x)])
                if (!reach[static_cast<std::size_t>(y)]) {
                    reach[static_cast<std::size_t>(y)] = true;
                    queue.push_back(y);
                }
        }
        for (int i = 0; i < b; ++i)
            if (!reach[static_cast<std::size_t>(i)])
                return {false, "tree: bag " + std::to_string(i) + " disconnected"};
    }

    std::vector<std::vector<int>> bags_of(static_cast<std::size_t>(n));
    for (int i = 0; i < b; ++i)
        for (int v : td.bags[static_cast<std::size_t>(i)].members)
            bags_of[static_cast<std::size_t>(v)].push_back(i);

    for (int v = 0; v < n; ++v)
        if (bags_of[static_cast<std::size_t>(v)].empty())
            return {false, "vertex " + std::to_string(v) + " appears in no bag"};

    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (v < u)
                continue;
            const auto& bu = bags_of[static_cast<std::size_t>(u)];
            const auto& bv = bags_of[static_cast<std::size_t>(v)];
            bool covered = false;
            for (std::size_t i = 0, j = 0; i < bu.size() && j < bv.size();) {
                if (bu[i] == bv[j]) {
                    covered = true;
                    break;
                }
                bu[i] < bv[j] ? ++i : ++j;
            }
            if (!covered)
                return {false,
                        "edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag"};
        }

    for (int v = 0; v < n; ++v) {
        const auto& bv = bags_of[static_cast<std::size_t>(v)];
        std::vector<bool> in_set(static_cast<std::size_t>(b), false);
        for (int i : bv)
            in_set[static_cast<std::size_t>(i)] = true;
        std::vector<bool> reach(static_cast<std::size_t>(b), false);
        std::deque<int> queue{bv.front()};
        reach[static_cast<std::size_t>(bv.front())] = true;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : tree[static_cast<std::size_t>(x)])
                if (in_set[static_cast<std::size_t>(y)] && !reach[static_cast<std::size_t>(y)]) {
                    reach[static_cast<std::size_t>(y)] = true;
                    queue.push_back(y);
                }
        }
        for (int i : bv)
            if (!reach[static_cast<std::size_t>(i)])
                return {false, "bags of vertex " + std::to_string(v) + " not connected"};
    }

    return {true, ""};
}

void serialize_tree_decomposition(const TreeDecomposition& td, const Graph& g,
                                  std::ostream& out) {
    int max_bag = 0;
    for (const auto& bag : td.bags)
        max_bag = std::max(max_bag, bag.size());
    out << "s td " << td.bags.size() << ' ' << max_bag << ' ' << g.vertex_count() << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i].members)
            out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [x, y] : td.tree_edges)
        out << x + 1 << ' ' << y + 1 << '\n';
}

} // namespace orclique
