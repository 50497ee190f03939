#pragma once

#include <cstdint>
#include <optional>

#include "brooks/color_system.hpp"
#include "brooks/graph.hpp"

namespace brooks {

/// Limits for the brute-force searches. A search that would exceed them
/// throws BudgetExceeded instead of running unbounded.
struct OracleBudget {
  Vertex max_vertices = 12;
  std::uint64_t max_states = 100'000'000;
};

/// Backtracking over index assignments in vertex-id order.
std::optional<Coloring> exhaustive_respecting_coloring(const ColorSystem& sys,
                                                       const OracleBudget& budget = {});

/// Smallest k for which the plain k-color system has a respecting coloring.
Vertex chromatic_number(const Graph& g, const OracleBudget& budget = {});

/// Whether g contains a clique on `size` vertices. The vertex limit is waived
/// for size <= 6; the state limit always applies.
bool contains_clique(const Graph& g, Vertex size, const OracleBudget& budget = {});

/// Lists are [0, k) everywhere. Each edge gets a uniformly random permutation
/// of which every pair is kept independently with probability `keep`.
ColorSystem random_correspondence(const Graph& g, ColorIndex k, std::uint64_t seed, double keep = 0.5);
ColorSystem random_correspondence(Graph&&, ColorIndex, std::uint64_t, double = 0.5) = delete;

}  // namespace brooks
