#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "brooks/color_system.hpp"
#include "brooks/graph.hpp"

namespace brooks {

// DIMACS .col: "c ..." comments, one "p edge n m" header, then m lines
// "e u v" with 1-based ids. Signed graphs append "+" or "-" to every edge line.
struct DimacsGraph {
  Graph graph;
  std::optional<std::vector<Sign>> signs;  // per canonical edge id
};

/// Throws ParseError with the offending line number.
DimacsGraph parse_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g, const std::vector<Sign>* signs = nullptr);

// JSON instance:
//   {"n": 3, "k": 2, "lists": [[1,2],[2,3],[1,3]],
//    "edges": [{"u": 0, "v": 1, "matching": [[1, 0]]}, ...]}
// Vertex ids and list indices are 0-based. "matching" pairs are
// [index at u, index at v] in the record's own orientation.
struct JsonInstance {
  Graph graph;
  ColorIndex k = 0;
  std::vector<std::vector<Label>> lists;
  std::vector<std::vector<IndexPair>> matchings;  // per canonical edge id
  bool has_matchings = false;                     // every edge record carried "matching"
};

JsonInstance parse_instance_json(std::istream& in);
void write_instance_json(std::ostream& out, const ColorSystem& sys);

/// Text coloring, one "vertex label" line per colored vertex, 1-based
/// vertices. Uncolored vertices are omitted.
void write_coloring(std::ostream& out, const ColorSystem& sys, const Coloring& c);
/// {"coloring": [label or null, ...]} indexed by 0-based vertex.
void write_coloring_json(std::ostream& out, const ColorSystem& sys, const Coloring& c);

/// Reads either format back into indices of `sys`. Vertices never mentioned
/// stay uncolored. Throws ParseError, including for labels absent from L(v).
Coloring parse_coloring(std::istream& in, const ColorSystem& sys);

}  // namespace brooks
