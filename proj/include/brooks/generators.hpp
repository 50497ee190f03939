#pragma once

#include <cstdint>

#include "brooks/graph.hpp"

namespace brooks {

// Canonical fixtures. Vertex i is adjacent to i+1 along paths and cycles.
Graph gen_cycle(Vertex n);   // n >= 3, else TooSmall
Graph gen_clique(Vertex n);  // n >= 3, else TooSmall
Graph gen_path(Vertex n);    // n >= 1, else TooSmall

inline constexpr int kRegularGenerationAttempts = 100;

/// Simple d-regular graph from the pairing model. Points are paired one at a
/// time; a pair that would create a loop or a multi-edge is redrawn, and a run
/// that gets stuck restarts, up to kRegularGenerationAttempts times.
/// Throws InfeasibleDegreeSequence (n*d odd or d >= n) or GenerationFailed.
Graph gen_random_regular(Vertex n, Vertex d, std::uint64_t seed);

/// Uniform simple graph with exactly m edges (Floyd's subset sampling over the
/// n(n-1)/2 vertex pairs). Throws TooManyEdges.
Graph gen_gnm(Vertex n, std::int64_t m, std::uint64_t seed);

}  // namespace brooks
