#include "orclique/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "orclique/errors.hpp"

namespace orclique {

Graph Graph::from_edges(int vertex_count, std::span<const std::pair<int, int>> edges) {
    if (vertex_count < 0)
        throw ValidationError("negative vertex count");
    Graph g(vertex_count);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw ValidationError("edge id out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
        if (u == v)
            throw ValidationError("self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw ValidationError("duplicate edge " + std::to_string(key.first) + " " +
                                  std::to_string(key.second));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_)
        std::sort(nbrs.begin(), nbrs.end());
    g.edges_ = static_cast<long long>(seen.size());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

VertexSet VertexSet::of(std::vector<int> ids, int host_vertex_count) {
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw ValidationError("duplicate vertex in set");
    if (!ids.empty() && (ids.front() < 0 || ids.back() >= host_vertex_count))
        throw ValidationError("vertex id out of range for host graph");
    return VertexSet{std::move(ids), host_vertex_count};
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.host_vertex_count = std::max(a.host_vertex_count, b.host_vertex_count);
    std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                   std::back_inserter(out.members));
    return out;
}

VertexSet set_complement(const VertexSet& s) {
    VertexSet out;
    out.host_vertex_count = s.host_vertex_count;
    std::size_t i = 0;
    for (int v = 0; v < s.host_vertex_count; ++v) {
        if (i < s.members.size() && s.members[i] == v)
            ++i;
        else
            out.members.push_back(v);
    }
    return out;
}

namespace {

struct DataLine {
    int line_no;
    long long a;
    long long b;
};

// Shared tokenizer for the edge-list reader: strips '#' comments, collects
// "int int" lines, rejects anything else.
std::vector<DataLine> read_pair_lines(std::istream& in) {
    std::vector<DataLine> lines;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto pos = raw.find('#'); pos != std::string::npos)
            raw.erase(pos);
        std::istringstream ls(raw);
        long long a, b;
        if (!(ls >> a)) {
            std::string leftover;
            std::istringstream check(raw);
            if (check >> leftover)
                throw ParseError("malformed token '" + leftover + "'", line_no);
            continue; // blank after comment strip
        }
        if (!(ls >> b))
            throw ParseError("expected two integers", line_no);
        std::string extra;
        if (ls >> extra)
            throw ParseError("trailing token '" + extra + "'", line_no);
        lines.push_back({line_no, a, b});
    }
    return lines;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    auto lines = read_pair_lines(in);
    if (lines.empty())
        return Graph(0);

    bool header = false;
    const auto& first = lines.front();
    if (!(first.a == 0 && first.b == 0) && first.a >= 0 && first.b >= 0 &&
        first.b == static_cast<long long>(lines.size()) - 1) {
        header = true;
        for (std::size_t i = 1; i < lines.size(); ++i)
            if (lines[i].a < 0 || lines[i].a >= first.a || lines[i].b < 0 ||
                lines[i].b >= first.a) {
                header = false;
                break;
            }
    }

    std::size_t start = header ? 1 : 0;
    long long n = header ? first.a : 0;
    if (!header)
        for (const auto& l : lines)
            n = std::max({n, l.a + 1, l.b + 1});
    if (n > (1LL << 30))
        throw ValidationError("vertex count too large");

    Graph g(static_cast<int>(n));
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = start; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.a < 0 || l.b < 0)
            throw ValidationError("negative vertex id", l.line_no);
        int u = static_cast<int>(l.a), v = static_cast<int>(l.b);
        if (u == v)
            throw ValidationError("self-loop at vertex " + std::to_string(u), l.line_no);
        if (!seen.insert(std::minmax(u, v)).second)
            throw ValidationError("duplicate edge " + std::to_string(u) + " " + std::to_string(v),
                                  l.line_no);
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

void serialize_edge_list(const Graph& g, std::ostream& out) {
    if (g.vertex_count() == 0)
        return;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

Graph parse_dimacs(std::istream& in) {
    std::string raw;
    int line_no = 0;
    bool have_p = false;
    long long n = 0, m = 0;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream ls(raw);
        std::string tag;
        if (!(ls >> tag))
            continue;
        if (tag == "c")
            continue;
        if (tag == "p") {
            if (have_p)
                throw ParseError("duplicate 'p' line", line_no);
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "edge")
                throw ParseError("expected 'p edge <n> <m>'", line_no);
            if (n < 0 || m < 0 || n > (1LL << 30))
                throw ParseError("bad problem dimensions", line_no);
            have_p = true;
            continue;
        }
        if (tag == "e") {
            if (!have_p)
                throw ParseError("'e' line before 'p' line", line_no);
            long long u, v;
            if (!(ls >> u >> v))
                throw ParseError("expected 'e <u> <v>'", line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ValidationError("vertex id out of range 1.." + std::to_string(n), line_no);
            if (u == v)
                throw ValidationError("self-loop at vertex " + std::to_string(u), line_no);
            int u0 = static_cast<int>(u - 1), v0 = static_cast<int>(v - 1);
            if (!seen.insert(std::minmax(u0, v0)).second)
                throw ValidationError("duplicate edge", line_no);
            edges.emplace_back(u0, v0);
            continue;
        }
        throw ParseError("unknown line type '" + tag + "'", line_no);
    }
    if (!have_p)
        throw ParseError("missing 'p' line");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("edge count mismatch: header says " + std::to_string(m) + ", found " +
                         std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

void serialize_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

long long encoding_size(const Graph& g) {
    long long n = g.vertex_count();
    unsigned base = static_cast<unsigned>(std::max(n, 2LL));
    long long bits = std::bit_width(base - 1);
    return n + g.edge_count() * bits;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!s.members.empty() && (s.members.front() < 0 || s.members.back() >= g.vertex_count()))
        throw ValidationError("vertex id out of range");
    std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < s.size(); ++i)
        new_id[static_cast<std::size_t>(s.members[i])] = i;
    std::vector<std::pair<int, int>> edges;
    for (int u : s.members)
        for (int v : g.neighbors(u))
            if (u < v && new_id[static_cast<std::size_t>(v)] >= 0)
                edges.emplace_back(new_id[static_cast<std::size_t>(u)],
                                   new_id[static_cast<std::size_t>(v)]);
    return {Graph::from_edges(s.size(), edges), s.members};
}

Graph disjoint_union(std::span<const Graph> parts) {
    int total = 0;
    for (const auto& p : parts)
        total += p.vertex_count();
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges())
            edges.emplace_back(u + offset, v + offset);
        offset += p.vertex_count();
    }
    return Graph::from_edges(total, edges);
}

Graph add_apexes(const Graph& g, int count) {
    if (count < 0)
        throw ValidationError("negative apex count");
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int a = n; a < n + count; ++a)
        for (int v = 0; v < a; ++v)
            edges.emplace_back(v, a);
    return Graph::from_edges(n + count, edges);
}

} // namespace orclique
