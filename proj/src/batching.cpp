#include "orclique/batching.hpp"

#include <algorithm>
#include <cmath>

#include "orclique/errors.hpp"

namespace orclique {

long long batch_group_size(long long n, int c) {
    if (n < 2)
        throw ValidationError("batching requires encoding size >= 2");
    if (c < 0)
        throw ValidationError("negative batching exponent");
    double lg = std::log2(static_cast<double>(n));
    double val = 1.0;
    for (int i = 0; i < c; ++i)
        val *= lg;
    auto group = static_cast<long long>(std::ceil(val));
    return std::max(1LL, group);
}

BatchPlan make_batch_plan(int query_count, int c, long long n) {
    BatchPlan plan;
    plan.group_size = batch_group_size(n, c);
    plan.c = c;
    plan.n = n;
    for (int first = 0; first < query_count; first += static_cast<int>(plan.group_size))
        plan.groups.emplace_back(first,
                                 std::min<long long>(query_count, first + plan.group_size));
    return plan;
}

std::pair<std::vector<CliqueInstance>, int> equalize_k(std::span<const CliqueInstance> queries) {
    if (queries.empty())
        throw ValidationError("cannot equalize an empty query sequence");
    int k_star = 0;
    for (const auto& q : queries)
        k_star = std::max(k_star, q.k);
    std::vector<CliqueInstance> out;
    out.reserve(queries.size());
    for (const auto& q : queries) {
        if (q.k == k_star)
            out.push_back(q);
        else
            out.push_back(CliqueInstance{add_apexes(q.graph, k_star - q.k), k_star});
    }
    return {std::move(out), k_star};
}

CliqueInstance trivial_or_compose(std::span<const CliqueInstance> queries) {
    auto [equalized, k_star] = equalize_k(queries);
    std::vector<Graph> graphs;
    graphs.reserve(equalized.size());
    for (auto& q : equalized)
        graphs.push_back(std::move(q.graph));
    return CliqueInstance{disjoint_union(graphs), k_star};
}

QuerySet batch_queries(const QuerySet& qs, int c, long long n) {
    if (qs.immediate_answer)
        return qs;
    QuerySet out;
    out.parameter_name = qs.parameter_name;
    out.parameter_value = qs.parameter_value;
    if (qs.queries.empty())
        return out;

    auto plan = make_batch_plan(static_cast<int>(qs.queries.size()), c, n);
    for (auto [first, last] : plan.groups) {
        std::vector<CliqueInstance> group;
        group.reserve(static_cast<std::size_t>(last - first));
        for (int i = first; i < last; ++i)
            group.push_back(qs.queries[static_cast<std::size_t>(i)].instance);
        out.queries.push_back(Query{trivial_or_compose(group),
                                    {},
                                    "batch[" + std::to_string(first) + ".." +
                                        std::to_string(last) + ")"});
    }
    return out;
}

} // namespace orclique
