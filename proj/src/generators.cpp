#include "brooks/generators.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "brooks/random.hpp"

namespace brooks {

namespace {

void require_at_least(Vertex n, Vertex minimum, const char* what) {
  if (n < minimum) {
    throw Error(ErrorCode::TooSmall, std::string(what) + " needs at least " +
                                         std::to_string(minimum) + " vertices, got " +
                                         std::to_string(n));
  }
}

std::vector<Edge> complement_edges(Vertex n, const std::vector<std::vector<Vertex>>& adj) {
  std::vector<Edge> out;
  std::vector<char> mark(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : adj[u]) mark[w] = 1;
    for (Vertex w = u + 1; w < n; ++w) {
      if (!mark[w]) out.push_back({u, w});
    }
    for (Vertex w : adj[u]) mark[w] = 0;
  }
  return out;
}

// One pairing run; returns false when it gets stuck.
bool try_pairing(Vertex n, Vertex d, Rng& rng, std::vector<std::vector<Vertex>>& adj) {
  constexpr int kMaxConsecutiveRejections = 256;
  for (auto& a : adj) a.clear();
  std::vector<Vertex> points;
  points.reserve(static_cast<std::size_t>(n) * d);
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);

  int rejections = 0;
  while (!points.empty()) {
    const std::uint64_t remaining = points.size();
    std::size_t i = rng.below(remaining);
    std::size_t j = rng.below(remaining - 1);
    if (j >= i) ++j;
    const Vertex a = points[i];
    const Vertex b = points[j];
    const bool loop = a == b;
    const bool multi = !loop && std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
    if (loop || multi) {
      if (++rejections > kMaxConsecutiveRejections) return false;
      continue;
    }
    rejections = 0;
    adj[a].push_back(b);
    adj[b].push_back(a);
    if (i < j) std::swap(i, j);
    points[i] = points.back();
    points.pop_back();
    points[j] = points.back();
    points.pop_back();
  }
  return true;
}

}  // namespace

Graph gen_cycle(Vertex n) {
  require_at_least(n, 3, "cycle");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph gen_clique(Vertex n) {
  require_at_least(n, 3, "clique");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph gen_path(Vertex n) {
  require_at_least(n, 1, "path");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

Graph gen_random_regular(Vertex n, Vertex d, std::uint64_t seed) {
  if (n < 1 || d < 0 || d >= n || (static_cast<std::int64_t>(n) * d) % 2 != 0) {
    throw Error(ErrorCode::InfeasibleDegreeSequence,
                "no simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) +
                    " vertices");
  }
  // Dense requests are generated as the complement of a sparse regular graph.
  const bool complement = d > (n - 1) / 2;
  const Vertex degree = complement ? n - 1 - d : d;

  Rng rng(seed);
  std::vector<std::vector<Vertex>> adj(n);
  for (int attempt = 0; attempt < kRegularGenerationAttempts; ++attempt) {
    if (!try_pairing(n, degree, rng, adj)) continue;
    if (complement) return Graph::from_edges(n, complement_edges(n, adj));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * degree / 2);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex w : adj[u])
        if (u < w) edges.push_back({u, w});
    return Graph::from_edges(n, edges);
  }
  throw Error(ErrorCode::GenerationFailed,
              "pairing model failed " + std::to_string(kRegularGenerationAttempts) + " times");
}

Graph gen_gnm(Vertex n, std::int64_t m, std::uint64_t seed) {
  if (n < 0 || m < 0) throw Error(ErrorCode::InvalidArgument, "negative size");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  const auto want = static_cast<std::uint64_t>(m);
  if (want > pairs) {
    throw Error(ErrorCode::TooManyEdges, std::to_string(m) + " edges exceed the " +
                                             std::to_string(pairs) + " vertex pairs");
  }
  Rng rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(want);
  for (std::uint64_t j = pairs - want; j < pairs; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> picks(chosen.begin(), chosen.end());
  std::sort(picks.begin(), picks.end());

  // Pair index p enumerates (u, v), u < v, row by row.
  std::vector<Edge> edges;
  edges.reserve(picks.size());
  Vertex u = 0;
  std::uint64_t row_start = 0;
  for (std::uint64_t p : picks) {
    while (p >= row_start + static_cast<std::uint64_t>(n - 1 - u)) {
      row_start += static_cast<std::uint64_t>(n - 1 - u);
      ++u;
    }
    edges.push_back({u, static_cast<Vertex>(u + 1 + (p - row_start))});
  }
  return Graph::from_edges(n, edges);
}

}  // namespace brooks
