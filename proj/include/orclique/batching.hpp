#pragma once

#include <span>
#include <utility>
#include <vector>

#include "orclique/kernel.hpp"

namespace orclique {

// Partition of query indices into consecutive runs of at most group_size.
struct BatchPlan {
    long long group_size = 1;
    std::vector<std::pair<int, int>> groups; // half-open [first, last)
    int c = 0;
    long long n = 0; // encoding size of the original instance
};

// max(1, ceil((log2 n)^c)); requires n >= 2.
long long batch_group_size(long long n, int c);

BatchPlan make_batch_plan(int query_count, int c, long long n);

// Raises every instance to k* = max k by adding apex vertices; answers are
// preserved. Returns the adjusted instances and k*.
std::pair<std::vector<CliqueInstance>, int> equalize_k(std::span<const CliqueInstance> queries);

// Disjoint union after k-equalization; Yes iff some input is Yes.
CliqueInstance trivial_or_compose(std::span<const CliqueInstance> queries);

// Replaces each consecutive group of up to ceil((log2 n)^c) queries by their
// composition, giving ceil(q/g) queries. An immediate answer passes through
// untouched.
QuerySet batch_queries(const QuerySet& qs, int c, long long n);

} // namespace orclique
