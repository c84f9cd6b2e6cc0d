#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace orclique {

// Simple undirected graph over dense 0-based vertex ids. Adjacency lists are
// kept sorted and symmetric; no self-loops, no parallel edges. Immutable
// after construction, so values can be shared freely across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count) : adj_(static_cast<std::size_t>(vertex_count)) {}

    // Validates: ids in range, no self-loops, no duplicates (in either
    // orientation). Throws ValidationError.
    static Graph from_edges(int vertex_count, std::span<const std::pair<int, int>> edges);

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    long long edge_count() const noexcept { return edges_; }
    std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(int u, int v) const;

    // Edges as sorted (u, v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adj_;
    long long edges_ = 0;
};

// Sorted set of vertex ids of some host graph.
struct VertexSet {
    std::vector<int> members;       // strictly increasing
    int host_vertex_count = 0;

    // Sorts the ids; throws ValidationError on duplicates or out-of-range ids.
    static VertexSet of(std::vector<int> ids, int host_vertex_count);

    int size() const noexcept { return static_cast<int>(members.size()); }
    bool empty() const noexcept { return members.empty(); }
    bool contains(int v) const;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_complement(const VertexSet& s);

// A Clique decision instance: does `graph` contain k pairwise adjacent
// vertices? k >= 1 always; k may exceed the vertex count (a "No" instance).
struct CliqueInstance {
    Graph graph;
    int k = 1;
};

// Edge-list format. Lines of "u v" pairs; '#' comments and blank lines are
// ignored. An optional leading "n m" header declares the vertex count, which
// is how graphs with trailing isolated vertices survive a round trip. The
// first data line (a, b) is taken as a header iff (a, b) != (0, 0), exactly b
// data lines follow, and every id on them is < a; otherwise it is an edge.
Graph parse_edge_list(std::istream& in);
void serialize_edge_list(const Graph& g, std::ostream& out);

// DIMACS edge format: single "p edge n m" line, then m lines "e u v" with
// 1-based ids. "c" comment lines allowed anywhere.
Graph parse_dimacs(std::istream& in);
void serialize_dimacs(const Graph& g, std::ostream& out);

// The artifact-wide definition of the size of a graph:
//   n_G + m_G * ceil(log2(max(n_G, 2))).
long long encoding_size(const Graph& g);

// Subgraph induced by `s`, relabeled to 0..|s|-1 preserving id order.
// Second component maps new id -> original id.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s);

// Vertex blocks concatenated in input order with offset relabeling.
Graph disjoint_union(std::span<const Graph> parts);

// Appends `count` universal vertices; raises the max clique size by exactly
// `count`.
Graph add_apexes(const Graph& g, int count);

} // namespace orclique
