#include "orclique/query_solving.hpp"

#include <atomic>

#include "orclique/errors.hpp"
#include "orclique/solver.hpp"

namespace orclique {

namespace {

bool solve_one(const CliqueInstance& inst) {
    auto r = has_clique(inst);
    if (r == SolveResult::BudgetExceeded)
        throw InvariantError("unlimited solve reported a budget");
    return r == SolveResult::Yes;
}

} // namespace

bool or_of_queries(const QuerySet& qs, ExecutionMode mode) {
    if (qs.immediate_answer)
        return *qs.immediate_answer;
    const auto count = static_cast<long long>(qs.queries.size());
    if (mode == ExecutionMode::Serial) {
        for (const auto& q : qs.queries)
            if (solve_one(q.instance))
                return true;
        return false;
    }
    std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
        if (found.load(std::memory_order_relaxed))
            continue;
        if (solve_one(qs.queries[static_cast<std::size_t>(i)].instance))
            found.store(true, std::memory_order_relaxed);
    }
    return found.load();
}

bool or_of_batched_groups(const QuerySet& raw, const BatchPlan& plan, ExecutionMode mode) {
    if (raw.immediate_answer)
        return *raw.immediate_answer;
    const auto count = static_cast<long long>(plan.groups.size());

    auto solve_group = [&](long long gi) {
        auto [first, last] = plan.groups[static_cast<std::size_t>(gi)];
        std::vector<CliqueInstance> group;
        group.reserve(static_cast<std::size_t>(last - first));
        for (int i = first; i < last; ++i)
            group.push_back(raw.queries[static_cast<std::size_t>(i)].instance);
        return solve_one(trivial_or_compose(group));
    };

    if (mode == ExecutionMode::Serial) {
        for (long long gi = 0; gi < count; ++gi)
            if (solve_group(gi))
                return true;
        return false;
    }
    std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 1)
    for (long long gi = 0; gi < count; ++gi) {
        if (found.load(std::memory_order_relaxed))
            continue;
        if (solve_group(gi))
            found.store(true, std::memory_order_relaxed);
    }
    return found.load();
}

} // namespace orclique
