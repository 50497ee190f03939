#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace brooks {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
using ColorIndex = std::int32_t;
using Label = std::int64_t;

inline constexpr ColorIndex kNoColor = -1;

/// Canonical undirected edge; `u < v` once it lives inside a Graph.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  TooSmall,
  InfeasibleDegreeSequence,
  GenerationFailed,
  TooManyEdges,
  RaggedLists,
  DuplicateLabelInList,
  InvalidMatching,
  NoFreeColor,
  AlreadyColored,
  PartialColoring,
  ListSizeMismatch,
  DegreeExceedsK,
  BudgetExceeded,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace brooks
