#include "brooks/engine.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace brooks {

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::SmallComponent: return "small-component";
    case StepKind::DfsTree: return "dfs-tree";
    case StepKind::DfsRoot: return "dfs-root";
    case StepKind::PathColor: return "path-color";
    case StepKind::Case1Pair: return "case1-pair";
    case StepKind::Case1Hub: return "case1-hub";
    case StepKind::Case2Bridge: return "case2-bridge";
    case StepKind::Case2Final: return "case2-final";
    case StepKind::CycleTwoColor: return "cycle-two-color";
  }
  return "unknown";
}

const char* to_string(ComponentIssue issue) {
  switch (issue) {
    case ComponentIssue::Clique: return "clique";
    case ComponentIssue::OddCycle: return "odd-cycle";
    case ComponentIssue::UncolorableCycle: return "uncolorable-cycle";
  }
  return "unknown";
}

namespace {

EdgeId edge_of(const Graph& g, Vertex a, Vertex b) {
  auto e = g.edge_between(a, b);
  if (!e) {
    throw Error(ErrorCode::InvalidArgument,
                "vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
  }
  return *e;
}

// Assigns colors and reports each step. Blocked indices are tracked with an
// epoch-stamped mark array so one step costs O(deg(v)).
class Painter {
 public:
  Painter(const ColorSystem& sys, Coloring& c, const StepObserver& observer)
      : sys_(sys), c_(c), observer_(observer), mark_(sys.k(), 0) {}

  const ColorSystem& sys() const { return sys_; }
  const Coloring& coloring() const { return c_; }

  ColorIndex color_first_free(Vertex v, StepKind kind, bool guard) {
    const int blocked = mark_blocked(v);
    if (blocked >= sys_.k()) {
      throw Error(ErrorCode::NoFreeColor, "all " + std::to_string(sys_.k()) + " colors of vertex " +
                                              std::to_string(v) + " are blocked (" + to_string(kind) + ")");
    }
    ColorIndex i = 0;
    while (mark_[i] == epoch_) ++i;
    commit(v, i, kind, blocked, guard);
    return i;
  }

  void color_with(Vertex v, ColorIndex i, StepKind kind, bool guard) {
    const int blocked = mark_blocked(v);
    if (i < 0 || i >= sys_.k() || mark_[i] == epoch_) {
      throw Error(ErrorCode::NoFreeColor, "index " + std::to_string(i) + " is not free at vertex " +
                                              std::to_string(v) + " (" + to_string(kind) + ")");
    }
    commit(v, i, kind, blocked, guard);
  }

  // Distinct indices of L(hub) blocked by `a` holding index ia and `b`
  // holding index ib, whether or not they are colored yet.
  int joint_block(Vertex hub, Vertex a, ColorIndex ia, Vertex b, ColorIndex ib) const {
    const Graph& g = sys_.graph();
    const ColorIndex ta = sys_.across(edge_of(g, a, hub), a, ia);
    const ColorIndex tb = sys_.across(edge_of(g, b, hub), b, ib);
    if (ta == kNoColor && tb == kNoColor) return 0;
    if (ta == kNoColor || tb == kNoColor || ta == tb) return 1;
    return 2;
  }

 private:
  int mark_blocked(Vertex v) {
    if (++epoch_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0u);
      epoch_ = 1;
    }
    const Graph& g = sys_.graph();
    auto nb = g.neighbors(v);
    int count = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (!c_.is_colored(nb[i])) continue;
      const ColorIndex hit = sys_.from_neighbor(v, i, c_[nb[i]]);
      if (hit != kNoColor && mark_[hit] != epoch_) {
        mark_[hit] = epoch_;
        ++count;
      }
    }
    return count;
  }

  void commit(Vertex v, ColorIndex i, StepKind kind, int blocked, bool guard) {
    if (observer_) observer_(ColorStep{v, i, kind, blocked, guard});
    c_.assign(v, i);
  }

  const ColorSystem& sys_;
  Coloring& c_;
  const StepObserver& observer_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
};

void path_color_impl(Painter& p, std::span<const Vertex> seq, Vertex terminal) {
  const Coloring& c = p.coloring();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex next = i + 1 < seq.size() ? seq[i + 1] : terminal;
    p.color_first_free(seq[i], StepKind::PathColor, !c.is_colored(next) && !c.is_colored(terminal));
  }
}

// Traversal state. The flags the searches test on every edge live in one
// byte per vertex, small enough to stay in cache when the graph does not.
struct Traversal {
  static constexpr std::uint8_t kSeen = 1;
  static constexpr std::uint8_t kInactive = 2;
  static constexpr std::uint8_t kTouched = 4;  // some neighbor lies in a removed cycle

  explicit Traversal(Vertex n) : flag(n, 0), removed(n, 0) {}

  bool fresh(Vertex v) const { return (flag[v] & (kSeen | kInactive)) == 0; }

  // Seen marks are cleared over the visited vertices, so a search never pays
  // for more than it touched.
  void unsee(std::span<const Vertex> vs) {
    for (Vertex v : vs) flag[v] &= static_cast<std::uint8_t>(~kSeen);
  }

  HugeVector<std::uint8_t> flag;
  HugeVector<Vertex> removed;  // neighbors currently inside a removed cycle
  HugeVector<Vertex> parent;   // DFS parent of order[i], aligned with the order
  HugeVector<std::pair<Vertex, Vertex>> stack;  // (vertex, parent)
};

// Preorder of the active vertices reachable from `root`, neighbors in
// ascending id order. Pushing every unseen neighbor in descending order and
// marking on pop reproduces the recursive preorder and parents exactly, and
// lets the neighbor lookups of one vertex overlap in memory. The seen marks
// are left set; callers clear them over `order`.
void dfs_preorder(const Graph& g, Vertex root, Traversal& t, HugeVector<Vertex>& order) {
  order.clear();
  t.parent.clear();
  t.stack.assign(1, {root, -1});
  while (!t.stack.empty()) {
    const auto [v, parent] = t.stack.back();
    t.stack.pop_back();
    if (t.flag[v] & Traversal::kSeen) continue;
    t.flag[v] |= Traversal::kSeen;
    order.push_back(v);
    t.parent.push_back(parent);
    auto nb = g.neighbors(v);
    for (std::size_t i = nb.size(); i-- > 0;) {
      if (t.fresh(nb[i])) {
        __builtin_prefetch(g.neighbors(nb[i]).data());
        t.stack.emplace_back(nb[i], v);
      }
    }
  }
}

void grow_path_into(const Graph& g, Vertex x, Vertex v, Vertex y, PathState& ps) {
  if (!g.adjacent(x, v) || !g.adjacent(v, y) || x == y) {
    throw Error(ErrorCode::InvalidArgument, "x and y must be distinct neighbors of v");
  }
  for (Vertex w : {x, v, y}) {
    ps.position[w] = ps.length();
    ps.order.push_back(w);
  }
  for (;;) {
    const Vertex end = ps.order.back();
    Vertex extension = -1;
    for (Vertex w : g.neighbors(end)) {
      if (ps.position[w] == -1) {
        extension = w;
        break;
      }
    }
    if (extension == -1) break;
    ps.position[extension] = ps.length();
    ps.order.push_back(extension);
  }
  Vertex smallest = ps.length() - 1;
  for (Vertex w : g.neighbors(ps.order.back())) smallest = std::min(smallest, ps.position[w]);
  ps.cycle_start = smallest;
}

void clear_path(PathState& ps) {
  for (Vertex w : ps.order) ps.position[w] = -1;
  ps.order.clear();
  ps.cycle_start = 0;
}

void case1_impl(Painter& p, const PathState& path) {
  const ColorSystem& sys = p.sys();
  const Graph& g = sys.graph();
  const auto& o = path.order;
  if (o.size() < 4) throw Error(ErrorCode::InvalidArgument, "spanning path too short for a k >= 3 component");
  const Vertex v1 = o[0], v2 = o[1], v3 = o[2];

  Vertex anchor = -1;
  for (Vertex w : g.neighbors(v2)) {
    if (w != v1 && w != v3) {
      anchor = w;
      break;
    }
  }
  if (anchor == -1 || path.position[anchor] < 3) {
    throw Error(ErrorCode::InvalidArgument, "v2 needs a third neighbor on the path");
  }
  const auto at = static_cast<std::size_t>(path.position[anchor]);

  const auto [a, b] = choose_case1_pair(sys, v1, v2, v3);
  const bool pair_ok = p.joint_block(v2, v1, a, v3, b) <= 1;
  p.color_with(v1, a, StepKind::Case1Pair, pair_ok);
  p.color_with(v3, b, StepKind::Case1Pair, pair_ok);

  // v4 ... v_{j-1}; v_j
  path_color_impl(p, std::span<const Vertex>(o).subspan(3, at - 3), anchor);
  // v_n ... v_j; v2
  std::vector<Vertex> back(o.rbegin(), o.rend() - static_cast<std::ptrdiff_t>(at));
  path_color_impl(p, back, v2);

  p.color_first_free(v2, StepKind::Case1Hub, pair_ok);
}

bool case2_impl(Painter& p, std::span<const Vertex> cycle) {
  const ColorSystem& sys = p.sys();
  const Graph& g = sys.graph();
  const Coloring& c = p.coloring();
  if (cycle.size() < 2) throw Error(ErrorCode::InvalidArgument, "cycle needs at least two vertices");

  // The last cycle vertex has every neighbor on the path, so l < r.
  std::ptrdiff_t l = -1;
  Vertex u = -1;
  for (auto i = static_cast<std::ptrdiff_t>(cycle.size()) - 2; i >= 0 && l < 0; --i) {
    for (Vertex w : g.neighbors(cycle[i])) {
      if (c.is_colored(w)) {
        l = i;
        u = w;
        break;
      }
    }
  }
  if (l < 0) return false;

  const Vertex hub = cycle[l];
  const Vertex next = cycle[l + 1];
  const ColorIndex b = choose_bridge_color(sys, c, u, hub, next);
  const bool bridge_ok = p.joint_block(hub, u, c[u], next, b) <= 1;
  p.color_with(next, b, StepKind::Case2Bridge, bridge_ok);

  // v_{l+2} ... v_r, v_j ... v_{l-1}; v_l
  std::vector<Vertex> seq(cycle.begin() + l + 2, cycle.end());
  seq.insert(seq.end(), cycle.begin(), cycle.begin() + l);
  path_color_impl(p, seq, hub);

  p.color_first_free(hub, StepKind::Case2Final, bridge_ok);
  return true;
}

class Driver {
 public:
  Driver(const Graph& g, const ColorSystem& sys, const StepObserver& observer)
      : g_(g),
        k_(sys.k()),
        coloring_(g.vertex_count()),
        painter_(sys, coloring_, observer),
        scratch_(g.vertex_count()) {
    path_.position.assign(g.vertex_count(), -1);
  }

  BrooksOutcome run() {
    std::vector<Task> components;
    for (Vertex s = 0; s < g_.vertex_count(); ++s) {
      if (scratch_.fresh(s)) components.push_back(grow_component(s));
    }
    for (const auto& component : components) scratch_.unsee(component.vertices);
    for (auto& component : components) {
      stack_.push_back(std::move(component));
      while (!stack_.empty()) {
        Task task = std::move(stack_.back());
        stack_.pop_back();
        if (task.kind == Task::Solve) {
          solve(task.vertices, task.root);
        } else {
          finish_cycle(task.vertices);
        }
      }
    }
    std::sort(exceptions_.begin(), exceptions_.end(),
              [](const auto& a, const auto& b) { return a.vertices.front() < b.vertices.front(); });
    return {std::move(coloring_), std::move(exceptions_)};
  }

 private:
  struct Task {
    enum Kind { Solve, FinishCycle } kind;
    HugeVector<Vertex> vertices;
    Vertex root = -1;  // smallest vertex of active degree < k, if any
  };

  bool active(Vertex v) const { return !(scratch_.flag[v] & Traversal::kInactive); }

  Vertex active_degree(Vertex v) const {
    return (scratch_.flag[v] & Traversal::kTouched) ? g_.degree(v) - scratch_.removed[v] : g_.degree(v);
  }

  void set_active(std::span<const Vertex> vs, bool on) {
    for (Vertex w : vs) {
      if (on) {
        scratch_.flag[w] &= static_cast<std::uint8_t>(~Traversal::kInactive);
      } else {
        scratch_.flag[w] |= Traversal::kInactive;
      }
      for (Vertex x : g_.neighbors(w)) {
        Vertex& r = scratch_.removed[x];
        r += on ? -1 : 1;
        if (r > 0) {
          scratch_.flag[x] |= Traversal::kTouched;
        } else {
          scratch_.flag[x] &= static_cast<std::uint8_t>(~Traversal::kTouched);
        }
      }
    }
  }

  // The active component of `s` among unseen vertices, found by BFS while
  // tracking its smallest vertex of active degree < k. Leaves it marked seen.
  Task grow_component(Vertex s) {
    auto& flag = scratch_.flag;
    Task task{Task::Solve, {s}};
    auto& comp = task.vertices;
    flag[s] |= Traversal::kSeen;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      if (head + kFar < comp.size()) __builtin_prefetch(g_.neighbors(comp[head + kFar]).data());
      const Vertex v = comp[head];
      if (active_degree(v) < k_ && (task.root == -1 || v < task.root)) task.root = v;
      for (Vertex w : g_.neighbors(v)) {
        if (scratch_.fresh(w)) {
          flag[w] |= Traversal::kSeen;
          comp.push_back(w);
        }
      }
    }
    return task;
  }

  void report(ComponentIssue issue, std::span<const Vertex> span) {
    std::vector<Vertex> vs(span.begin(), span.end());
    std::sort(vs.begin(), vs.end());
    exceptions_.push_back({issue, std::move(vs)});
  }

  void solve(const HugeVector<Vertex>& vs, Vertex root) {
    const auto size = static_cast<Vertex>(vs.size());
    if (size <= k_) {
      std::vector<Vertex> sorted(vs.begin(), vs.end());
      std::sort(sorted.begin(), sorted.end());
      for (Vertex v : sorted) painter_.color_first_free(v, StepKind::SmallComponent, true);
      return;
    }
    if (k_ <= 1) {
      // Maximum degree at most k and more than k vertices: K1 (k = 0) or K2.
      report(ComponentIssue::Clique, vs);
      return;
    }

    if (root != -1) {
      color_from_low_degree_root(root);
      return;
    }

    // The component is k-regular, so no vertex has neighbors outside it.
    if (k_ == 2) {
      if (size % 2 == 1) {
        report(ComponentIssue::OddCycle, vs);
      } else {
        two_color_cycle(vs);
      }
      return;
    }

    const Vertex v = *std::min_element(vs.begin(), vs.end());
    const auto pair = find_nonadjacent_neighbors(g_, v);
    if (!pair) {
      assert(size == k_ + 1);
      report(ComponentIssue::Clique, vs);
      return;
    }

    grow_path_into(g_, pair->first, v, pair->second, path_);
    if (path_.length() == size) {
      case1_impl(painter_, path_);
      clear_path(path_);
      return;
    }

    HugeVector<Vertex> cycle(path_.cycle().begin(), path_.cycle().end());
    clear_path(path_);
    set_active(cycle, false);
    stack_.push_back({Task::FinishCycle, cycle});
    // Components of what remains, pushed so the first one found runs first.
    const std::size_t base = stack_.size();
    for (Vertex s : vs) {
      if (scratch_.fresh(s)) stack_.push_back(grow_component(s));
    }
    for (std::size_t t = base; t < stack_.size(); ++t) scratch_.unsee(stack_[t].vertices);
    std::reverse(stack_.begin() + static_cast<std::ptrdiff_t>(base), stack_.end());
  }

  void finish_cycle(const HugeVector<Vertex>& cycle) {
    if (case2_impl(painter_, cycle)) return;
    set_active(cycle, true);
    stack_.push_back(grow_component(cycle.front()));
    scratch_.unsee(stack_.back().vertices);
  }

  static constexpr std::size_t kFar = 16;
  static constexpr std::size_t kNear = 8;

  void color_from_low_degree_root(Vertex root) {
    dfs_preorder(g_, root, scratch_, order_);
    const Coloring& c = painter_.coloring();
    const ColorSystem& sys = painter_.sys();
    for (std::size_t i = order_.size(); i-- > 1;) {
      // The order is known ahead, so start the DRAM fetches a few steps early.
      if (i >= kFar) {
        const Vertex far = order_[i - kFar];
        __builtin_prefetch(g_.neighbors(far).data());
        sys.prefetch_arcs(far);
      }
      if (i >= kNear) {
        for (Vertex x : g_.neighbors(order_[i - kNear])) __builtin_prefetch(c.indices().data() + x);
      }
      const Vertex w = order_[i];
      painter_.color_first_free(w, StepKind::DfsTree, !c.is_colored(scratch_.parent[i]));
    }
    painter_.color_first_free(root, StepKind::DfsRoot, active_degree(root) < k_);
    scratch_.unsee(order_);
  }

  // Exact search over a cycle: fix the first index, sweep the cycle keeping
  // every index reachable at each vertex, then close the cycle.
  void two_color_cycle(const HugeVector<Vertex>& vs) {
    const ColorSystem& sys = painter_.sys();
    std::vector<Vertex> walk;
    Vertex prev = -1;
    Vertex cur = *std::min_element(vs.begin(), vs.end());
    do {
      walk.push_back(cur);
      auto nb = g_.neighbors(cur);
      const Vertex next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
    } while (cur != walk.front());

    const auto len = walk.size();
    const auto k = static_cast<std::size_t>(k_);
    std::vector<ColorIndex> from(len * k);
    std::vector<EdgeId> step_edge(len);
    for (std::size_t i = 0; i < len; ++i) step_edge[i] = edge_of(g_, walk[i], walk[(i + 1) % len]);

    for (ColorIndex first = 0; first < k_; ++first) {
      std::fill(from.begin(), from.end(), kNoColor);
      from[first] = first;
      for (std::size_t i = 1; i < len; ++i) {
        for (ColorIndex y = 0; y < k_; ++y) {
          if (from[(i - 1) * k + y] == kNoColor) continue;
          const ColorIndex hit = sys.across(step_edge[i - 1], walk[i - 1], y);
          for (ColorIndex x = 0; x < k_; ++x) {
            if (x != hit && from[i * k + x] == kNoColor) from[i * k + x] = y;
          }
        }
      }
      for (ColorIndex last = 0; last < k_; ++last) {
        if (from[(len - 1) * k + last] == kNoColor) continue;
        if (sys.across(step_edge[len - 1], walk[len - 1], last) == first) continue;
        std::vector<ColorIndex> pick(len);
        pick[len - 1] = last;
        for (std::size_t i = len - 1; i > 0; --i) pick[i - 1] = from[i * k + pick[i]];
        for (std::size_t i = 0; i < len; ++i) {
          painter_.color_with(walk[i], pick[i], StepKind::CycleTwoColor, true);
        }
        return;
      }
    }
    report(ComponentIssue::UncolorableCycle, vs);
  }

  const Graph& g_;
  ColorIndex k_;
  Coloring coloring_;
  Painter painter_;
  Traversal scratch_;
  PathState path_;
  HugeVector<Vertex> order_;
  std::vector<Task> stack_;
  std::vector<ComponentException> exceptions_;
};

}  // namespace

void path_color(const ColorSystem& sys, Coloring& c, std::span<const Vertex> seq, Vertex terminal,
                const StepObserver& observer) {
  Painter p(sys, c, observer);
  path_color_impl(p, seq, terminal);
}

std::vector<Vertex> low_degree_dfs_order(const Graph& g, Vertex root) {
  Traversal scratch(g.vertex_count());
  HugeVector<Vertex> order;
  dfs_preorder(g, root, scratch, order);
  return {order.begin(), order.end()};
}

PathState grow_maximal_path(const Graph& g, Vertex x, Vertex v, Vertex y) {
  PathState ps;
  ps.position.assign(g.vertex_count(), -1);
  grow_path_into(g, x, v, y, ps);
  return ps;
}

IndexPair choose_case1_pair(const ColorSystem& sys, Vertex v1, Vertex v2, Vertex v3) {
  const Graph& g = sys.graph();
  const EdgeId e1 = edge_of(g, v1, v2);
  const EdgeId e3 = edge_of(g, v3, v2);
  for (ColorIndex a = 0; a < sys.k(); ++a) {
    if (sys.across(e1, v1, a) == kNoColor) return {a, 0};
  }
  for (ColorIndex b = 0; b < sys.k(); ++b) {
    if (sys.across(e3, v3, b) == kNoColor) return {0, b};
  }
  // Both matchings are perfect: aim v3 at the index of L(v2) that v1 blocks.
  return {0, sys.across(e3, v2, sys.across(e1, v1, 0))};
}

void color_case1(const ColorSystem& sys, Coloring& c, const PathState& path, const StepObserver& observer) {
  Painter p(sys, c, observer);
  case1_impl(p, path);
}

ColorIndex choose_bridge_color(const ColorSystem& sys, const Coloring& c, Vertex u, Vertex hub, Vertex next) {
  const Graph& g = sys.graph();
  const EdgeId into_hub = edge_of(g, next, hub);
  const ColorIndex taken = sys.across(edge_of(g, u, hub), u, c[u]);
  if (taken != kNoColor) {
    const ColorIndex same = sys.across(into_hub, hub, taken);
    if (same != kNoColor) return same;
  }
  for (ColorIndex b = 0; b < sys.k(); ++b) {
    if (sys.across(into_hub, next, b) == kNoColor) return b;
  }
  return 0;
}

bool color_case2(const ColorSystem& sys, Coloring& c, const PathState& path, const StepObserver& observer) {
  Painter p(sys, c, observer);
  return case2_impl(p, path.cycle());
}

BrooksOutcome brooks_color(const Graph& g, const ColorSystem& sys, const EngineOptions& options) {
  if (&sys.graph() != &g && !(sys.graph() == g)) {
    throw Error(ErrorCode::ListSizeMismatch, "color system was built over a different graph");
  }
  const Vertex delta = max_degree(g);
  if (delta > sys.k()) {
    throw Error(ErrorCode::DegreeExceedsK, "maximum degree " + std::to_string(delta) + " exceeds k = " +
                                               std::to_string(sys.k()));
  }
  return Driver(g, sys, options.observer).run();
}

}  // namespace brooks
