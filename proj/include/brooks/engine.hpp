#pragma once

#include <functional>
#include <span>
#include <vector>

#include "brooks/color_system.hpp"
#include "brooks/graph.hpp"

namespace brooks {

/// Why a vertex could be colored at the moment it was colored.
enum class StepKind {
  SmallComponent,  // component with at most k vertices, id order
  DfsTree,         // decreasing DFS label; the tree parent is still uncolored
  DfsRoot,         // the low-degree root, colored last
  PathColor,       // next vertex of the sequence (or the terminal) is uncolored
  Case1Pair,       // v1 and v3, together blocking at most one color of v2
  Case1Hub,        // v2, colored last on a spanning path
  Case2Bridge,     // v_{l+1}, together with u blocking at most one color of v_l
  Case2Final,      // v_l, colored last on the cycle
  CycleTwoColor,   // k = 2 even cycle
};

const char* to_string(StepKind kind);

struct ColorStep {
  Vertex vertex = 0;
  ColorIndex index = kNoColor;
  StepKind kind = StepKind::SmallComponent;
  int blocked = 0;           // distinct blocked indices right before coloring
  bool guard_holds = true;   // the structural reason for `kind` held
};

using StepObserver = std::function<void(const ColorStep&)>;

/// The path v1 v2 ... v_r grown from x, v, y. Indices are 0-based:
/// `order[0]` is v1 and the cycle C is `order[cycle_start..]`.
struct PathState {
  std::vector<Vertex> order;
  std::vector<Vertex> position;  // vertex -> index in `order`, -1 if off the path
  Vertex cycle_start = 0;

  Vertex length() const { return static_cast<Vertex>(order.size()); }
  std::span<const Vertex> cycle() const {
    return std::span<const Vertex>(order).subspan(static_cast<std::size_t>(cycle_start));
  }
};

enum class ComponentIssue {
  Clique,            // the component is K_{k+1}
  OddCycle,          // k = 2 and the component is an odd cycle
  UncolorableCycle,  // k = 2, even cycle whose matchings admit no coloring
};

const char* to_string(ComponentIssue issue);

struct ComponentException {
  ComponentIssue issue = ComponentIssue::Clique;
  std::vector<Vertex> vertices;  // ascending

  friend bool operator==(const ComponentException&, const ComponentException&) = default;
};

/// Full coloring when `exceptions` is empty. Otherwise every component not
/// listed is still colored and the listed ones stay uncolored.
struct BrooksOutcome {
  Coloring coloring;
  std::vector<ComponentException> exceptions;

  bool colored() const { return exceptions.empty(); }
};

struct EngineOptions {
  StepObserver observer;
};

/// Colors `seq` in order with the first free index, leaving `terminal`
/// uncolored. Throws NoFreeColor if some vertex has all k indices blocked.
void path_color(const ColorSystem& sys, Coloring& c, std::span<const Vertex> seq, Vertex terminal,
                const StepObserver& observer = {});

/// DFS preorder of root's component, neighbors explored in ascending id order.
/// Coloring in reverse of this order leaves every parent uncolored until its
/// children are done.
std::vector<Vertex> low_degree_dfs_order(const Graph& g, Vertex root);

/// Starts at x, v, y and repeatedly appends the smallest-id neighbor of the
/// endpoint that is not yet on the path. `cycle_start` is the smallest path
/// index among the neighbors of the final endpoint.
PathState grow_maximal_path(const Graph& g, Vertex x, Vertex v, Vertex y);

/// Indices for v1 and v3 that jointly block at most one index of L(v2).
IndexPair choose_case1_pair(const ColorSystem& sys, Vertex v1, Vertex v2, Vertex v3);

/// Colors a component spanned by `path` (r = n, k-regular, k >= 3).
void color_case1(const ColorSystem& sys, Coloring& c, const PathState& path,
                 const StepObserver& observer = {});

/// Index for `next` (v_{l+1}) such that it and the colored `u` jointly block
/// at most one index of L(`hub`) (v_l).
ColorIndex choose_bridge_color(const ColorSystem& sys, const Coloring& c, Vertex u, Vertex hub,
                               Vertex next);

/// Colors the cycle of `path` once everything outside it is colored. Returns
/// false and leaves the cycle untouched when no cycle vertex has a colored
/// neighbor; the caller then colors the cycle as an instance of its own.
bool color_case2(const ColorSystem& sys, Coloring& c, const PathState& path,
                 const StepObserver& observer = {});

/// Per-component driver. Throws ListSizeMismatch when `sys` is not built
/// over `g`, DegreeExceedsK when max_degree(g) > sys.k().
BrooksOutcome brooks_color(const Graph& g, const ColorSystem& sys, const EngineOptions& options = {});

}  // namespace brooks
