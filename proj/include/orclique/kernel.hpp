#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orclique/graph.hpp"

namespace orclique {

// One output instance of an OR kernel. `source_vertices` maps the query's
// local ids back to the input graph (empty for composed queries, which are
// not induced subgraphs).
struct Query {
    CliqueInstance instance;
    std::vector<int> source_vertices;
    std::string note;
};

// Ordered query sequence with OR semantics: the input instance is a Yes
// iff immediate_answer is Yes or some query is a Yes. When immediate_answer
// is set, queries is empty.
struct QuerySet {
    std::vector<Query> queries;
    std::string parameter_name;
    long long parameter_value = 0; // achieved quantity: degeneracy, |X|, max bag size
    std::optional<bool> immediate_answer;
};

// One query per vertex: the subgraph induced by its closed neighborhood
// restricted to later vertices of the degeneracy order. At most n queries of
// at most p+1 vertices each.
QuerySet kernel_degeneracy(const CliqueInstance& inst);

// Runs the budgeted exact transversal search with budget ceil(log2 n) over
// the encoding size; a transversal that small makes the instance cheap to
// solve outright (immediate answer). Otherwise queries G[e + X] per edge e of
// G-X under the greedy transversal, plus G[{v} + X] per vertex isolated in
// G-X. At most m+n queries of at most |X|+2 vertices.
QuerySet kernel_oct(const CliqueInstance& inst);

// The query-emission half of kernel_oct for a given transversal.
QuerySet oct_queries_with_modulator(const CliqueInstance& inst, const VertexSet& transversal);

// Finds the smallest p' with a bounded-degree modulator X, then queries
// G[X + N_H[v]] per vertex v of H = G-X (the single query G[X] when H is
// empty). At most max(n,1) queries of at most |X|+d+1 vertices.
QuerySet kernel_bounded_degree(const CliqueInstance& inst, int d);

// Greedy chordal modulator X, then queries G[X + N<sigma>+[v]] along a
// perfect elimination ordering of H = G-X; answers Yes immediately when some
// later neighborhood already has k vertices (it induces a clique). At most n
// queries of at most |X|+k vertices.
QuerySet kernel_chordal(const CliqueInstance& inst);

// k <= 2 is answered directly; otherwise every non-bipartite block gets a
// tree decomposition and one query per bag. Bipartite blocks contain no
// triangle and are skipped. At most n+2m queries.
QuerySet kernel_longest_odd_cycle(const CliqueInstance& inst);

} // namespace orclique
