#pragma once

#include "orclique/batching.hpp"
#include "orclique/kernel.hpp"

namespace orclique {

// Queries of a set are independent; OR is order-insensitive, so the parallel
// path gives the same answer as the serial reference.
enum class ExecutionMode { Serial, Parallel };

// Resolves the OR of a query set with the exact solver.
bool or_of_queries(const QuerySet& qs, ExecutionMode mode = ExecutionMode::Parallel);

// Same, but composes and solves one batched group at a time instead of
// materializing the whole batched set.
bool or_of_batched_groups(const QuerySet& raw, const BatchPlan& plan,
                          ExecutionMode mode = ExecutionMode::Parallel);

} // namespace orclique
