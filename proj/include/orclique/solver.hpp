#pragma once

#include <cstdint>
#include <optional>

#include "orclique/graph.hpp"

namespace orclique {

// Cap on the number of search-tree nodes a solve may expand.
struct SolveBudget {
    std::optional<std::uint64_t> node_limit; // empty = unlimited

    static SolveBudget unlimited() { return {}; }
    static SolveBudget nodes(std::uint64_t n) { return {n}; }
};

enum class SolveResult { Yes, No, BudgetExceeded };

// Exact clique decision. Branch and bound over the degeneracy order: each
// vertex's candidate set is its later neighborhood, recursion uses a pivot
// (Tomita style) and exits as soon as a clique of size k is completed.
// Deterministic: all ties broken by vertex id.
SolveResult has_clique(const CliqueInstance& inst, SolveBudget budget = SolveBudget::unlimited());

// Independent oracle: enumerates cliques by increasing-id extension, with no
// degeneracy order, no pivoting and no pruning beyond candidate exhaustion.
// Shares nothing with has_clique beyond the Graph type. Meant for small
// graphs.
bool brute_force_has_clique(const CliqueInstance& inst);

} // namespace orclique
