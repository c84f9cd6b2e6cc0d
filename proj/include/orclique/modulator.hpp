#pragma once

#include <cstdint>

#include "orclique/graph.hpp"

namespace orclique {

enum class ModulatorClass { Bipartite, BoundedDegree, Chordal };
enum class ModulatorMethod { Exact, Approx, Greedy };

// A vertex set whose deletion places the host graph in the target class.
struct Modulator {
    VertexSet vertices;
    ModulatorClass target_class = ModulatorClass::Bipartite;
    int degree_bound = 0; // meaningful for BoundedDegree
    ModulatorMethod method = ModulatorMethod::Greedy;
};

// Re-checks the defining property of G - X from scratch.
bool certify_modulator(const Graph& g, const Modulator& m);

enum class OctStatus { Found, NoneWithin, Abort };

struct OctResult {
    OctStatus status = OctStatus::Abort;
    Modulator modulator; // set iff status == Found
};

inline constexpr std::uint64_t kDefaultOctStepCap = std::uint64_t{1} << 26;

// Minimum odd cycle transversal when it has size <= budget, by iterative
// compression: vertices are inserted one at a time while a minimum
// transversal of the growing prefix is maintained; each compression
// enumerates the 3^|X| delete/left/right partitions of the current solution
// plus the new vertex and finishes with a vertex min-cut. NoneWithin
// certifies that the minimum exceeds the budget. Abort fires only when the
// partition step cap trips.
OctResult oct_exact(const Graph& g, int budget, std::uint64_t step_cap = kDefaultOctStepCap);

// Greedy transversal with no size guarantee: repeatedly delete the highest
// degree vertex of some odd cycle until bipartite.
Modulator oct_heuristic(const Graph& g);

struct BoundedDegreeResult {
    bool found = false;
    Modulator modulator; // set iff found
};

// Either a set X with |X| <= p*(p+d+1) and max degree of G-X at most d, or
// "No" certifying that every such set has size > p. Vertices of degree
// >= p+d+1 are forced; the remaining high-degree vertices are taken wholesale
// when few enough.
BoundedDegreeResult bounded_degree_modulator(const Graph& g, int d, int p);

// Greedy chordal deletion set: while some chordless cycle exists, delete its
// highest degree vertex (ties by id).
Modulator chordal_modulator_greedy(const Graph& g);

} // namespace orclique
