#include "brooks/oracle.hpp"

#include <numeric>
#include <string>

#include "brooks/random.hpp"

namespace brooks {

namespace {

void check_vertices(const Graph& g, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices) {
    throw Error(ErrorCode::BudgetExceeded, "oracle limited to " + std::to_string(budget.max_vertices) +
                                               " vertices, instance has " +
                                               std::to_string(g.vertex_count()));
  }
}

class StateCounter {
 public:
  explicit StateCounter(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++states_ > limit_) {
      throw Error(ErrorCode::BudgetExceeded, "oracle exceeded " + std::to_string(limit_) + " states");
    }
  }

 private:
  std::uint64_t limit_;
  std::uint64_t states_ = 0;
};

// Index i at v clashes with some earlier (smaller-id) neighbor's assignment.
bool clashes(const ColorSystem& sys, const std::vector<ColorIndex>& assigned, Vertex v, ColorIndex i) {
  const Graph& g = sys.graph();
  auto nb = g.neighbors(v);
  auto inc = g.incident_edges(v);
  for (std::size_t p = 0; p < nb.size() && nb[p] < v; ++p) {
    if (sys.across(inc[p], nb[p], assigned[nb[p]]) == i) return true;
  }
  return false;
}

bool extend(const ColorSystem& sys, std::vector<ColorIndex>& assigned, Vertex v, StateCounter& states) {
  if (v == static_cast<Vertex>(assigned.size())) return true;
  for (ColorIndex i = 0; i < sys.k(); ++i) {
    states.tick();
    if (clashes(sys, assigned, v, i)) continue;
    assigned[v] = i;
    if (extend(sys, assigned, v + 1, states)) return true;
  }
  assigned[v] = kNoColor;
  return false;
}

bool grow_clique(const Graph& g, std::vector<Vertex>& candidates, Vertex missing, StateCounter& states) {
  if (missing == 0) return true;
  if (static_cast<Vertex>(candidates.size()) < missing) return false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    states.tick();
    const Vertex v = candidates[i];
    std::vector<Vertex> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
    }
    if (grow_clique(g, next, missing - 1, states)) return true;
  }
  return false;
}

}  // namespace

std::optional<Coloring> exhaustive_respecting_coloring(const ColorSystem& sys, const OracleBudget& budget) {
  check_vertices(sys.graph(), budget);
  std::vector<ColorIndex> assigned(sys.graph().vertex_count(), kNoColor);
  StateCounter states(budget.max_states);
  if (!extend(sys, assigned, 0, states)) return std::nullopt;
  return Coloring::from_indices(std::move(assigned));
}

Vertex chromatic_number(const Graph& g, const OracleBudget& budget) {
  check_vertices(g, budget);
  for (Vertex k = 0;; ++k) {
    if (exhaustive_respecting_coloring(plain_system(g, k), budget)) return k;
  }
}

bool contains_clique(const Graph& g, Vertex size, const OracleBudget& budget) {
  if (size > 6) check_vertices(g, budget);
  if (size <= 0) return true;
  std::vector<Vertex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  StateCounter states(budget.max_states);
  return grow_clique(g, all, size, states);
}

ColorSystem random_correspondence(const Graph& g, ColorIndex k, std::uint64_t seed, double keep) {
  Rng rng(seed);
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(g.vertex_count()) * k);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (ColorIndex i = 0; i < k; ++i) labels.push_back(i);

  // Keep decisions use 53 random bits so keep = 1 always keeps.
  const auto threshold = static_cast<std::uint64_t>(keep * static_cast<double>(1ull << 53));
  std::vector<std::vector<IndexPair>> matchings(g.edge_count());
  std::vector<ColorIndex> perm(k);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm.begin(), perm.end());
    for (ColorIndex a = 0; a < k; ++a) {
      if ((rng.next() >> 11) < threshold) matchings[e].emplace_back(a, perm[a]);
    }
  }
  return ColorSystem::from_matchings(g, k, std::move(labels), matchings);
}

}  // namespace brooks
