// Copyright 2026 The pdlab Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded random graph families. Every generator is a pure function of its
// arguments: same inputs, same edge list, on every platform.

#ifndef PDLAB_GRAPHS_HPP_
#define PDLAB_GRAPHS_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pdlab/common.hpp"
#include "pdlab/planarity.hpp"

namespace pdlab {

struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<Index, Index>> edges;  // u < v, sorted, unique

  std::vector<std::vector<Index>> Adjacency() const {
    std::vector<std::vector<Index>> adj(n);
    for (const auto& [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return adj;
  }

  std::vector<std::size_t> Degrees() const {
    std::vector<std::size_t> deg(n, 0);
    for (const auto& [u, v] : edges) {
      ++deg[u];
      ++deg[v];
    }
    return deg;
  }

  friend bool operator==(const Graph&, const Graph&) = default;
};

// rhs_adj[j] lists the LHS neighbours of RHS node j, increasing.
struct BipartiteGraph {
  std::size_t n_lhs = 0;
  std::size_t n_rhs = 0;
  std::vector<std::vector<Index>> rhs_adj;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

namespace internal {

class EdgeSetBuilder {
 public:
  explicit EdgeSetBuilder(std::size_t n) : n_(n) {}

  bool Add(Index u, Index v) {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return edges_.insert({u, v}).second;
  }

  bool Contains(Index u, Index v) const {
    if (u > v) std::swap(u, v);
    return edges_.count({u, v}) > 0;
  }

  Graph Build() const {
    Graph g;
    g.n = n_;
    g.edges.assign(edges_.begin(), edges_.end());
    return g;
  }

 private:
  std::size_t n_;
  std::set<std::pair<Index, Index>> edges_;
};

// Draws `count` distinct indices from `candidates`, each draw proportional to
// weight[c]. Falls back to uniform over the remaining candidates when their
// total weight is zero.
inline std::vector<Index> WeightedSampleWithoutReplacement(
    std::vector<Index> candidates, const std::vector<double>& weight,
    std::size_t count, Rng& rng) {
  std::vector<Index> picked;
  picked.reserve(count);
  while (picked.size() < count && !candidates.empty()) {
    double total = 0.0;
    for (Index c : candidates) total += weight[c];
    std::size_t pos = 0;
    if (total > 0.0) {
      double target = rng.Uniform01() * total;
      pos = candidates.size() - 1;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        target -= weight[candidates[i]];
        if (target < 0.0) {
          pos = i;
          break;
        }
      }
    } else {
      pos = static_cast<std::size_t>(rng.UniformInt(0, candidates.size() - 1));
    }
    picked.push_back(candidates[pos]);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return picked;
}

}  // namespace internal

// Preferential attachment. The number of links per new node is drawn once per
// graph from [attach_lo, attach_hi]; growth starts from a clique on that many
// nodes.
inline Graph GenBa(std::size_t n, std::size_t attach_lo, std::size_t attach_hi,
                   std::uint64_t seed) {
  if (attach_lo < 1 || attach_lo > attach_hi || attach_hi >= n) {
    Fail(ErrorKind::kInvalidArgument,
         "BA needs 1 <= attach_lo <= attach_hi < n");
  }
  Rng rng(seed);
  const auto m = static_cast<std::size_t>(rng.UniformInt(attach_lo, attach_hi));
  internal::EdgeSetBuilder b(n);
  std::vector<double> degree(n, 0.0);
  for (Index u = 0; u < m; ++u) {
    for (Index v = u + 1; v < m; ++v) {
      b.Add(u, v);
      degree[u] += 1;
      degree[v] += 1;
    }
  }
  for (Index v = static_cast<Index>(m); v < n; ++v) {
    std::vector<Index> existing(v);
    for (Index u = 0; u < v; ++u) existing[u] = u;
    for (Index u :
         internal::WeightedSampleWithoutReplacement(existing, degree, m, rng)) {
      b.Add(u, v);
      degree[u] += 1;
      degree[v] += 1;
    }
  }
  return b.Build();
}

// Each RHS node links to b distinct LHS nodes. LHS nodes are drawn with
// probability proportional to degree + 1, so the first RHS node samples
// uniformly and untouched LHS nodes stay reachable.
inline BipartiteGraph GenBaBipartite(std::size_t n_lhs, std::size_t n_rhs,
                                     std::size_t b, std::uint64_t seed) {
  if (b < 1 || b > n_lhs) {
    Fail(ErrorKind::kInvalidArgument, "BA bipartite needs 1 <= b <= n_lhs");
  }
  Rng rng(seed);
  BipartiteGraph g;
  g.n_lhs = n_lhs;
  g.n_rhs = n_rhs;
  g.rhs_adj.resize(n_rhs);
  std::vector<double> weight(n_lhs, 1.0);
  std::vector<Index> all(n_lhs);
  for (Index i = 0; i < n_lhs; ++i) all[i] = i;
  for (std::size_t j = 0; j < n_rhs; ++j) {
    auto picked = internal::WeightedSampleWithoutReplacement(all, weight, b, rng);
    for (Index u : picked) weight[u] += 1.0;
    std::sort(picked.begin(), picked.end());
    g.rhs_adj[j] = std::move(picked);
  }
  return g;
}

// G(n, p) with p drawn uniformly from [p_lo, p_hi] once per graph.
inline Graph GenEr(std::size_t n, double p_lo, double p_hi, std::uint64_t seed) {
  if (!(0.0 <= p_lo && p_lo <= p_hi && p_hi <= 1.0)) {
    Fail(ErrorKind::kInvalidArgument, "ER needs 0 <= p_lo <= p_hi <= 1");
  }
  Rng rng(seed);
  const double p = rng.UniformReal(p_lo, p_hi);
  Graph g;
  g.n = n;
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v) {
      if (rng.Uniform01() < p) g.edges.push_back({u, v});
    }
  }
  return g;
}

struct StarLayout {
  Graph graph;
  std::vector<Index> centers;
  std::vector<std::vector<Index>> groups;  // groups[i] includes centers[i]
};

// Nodes are shuffled and cut into k groups (k uniform in [1, min(5, n)], or
// `parts` if nonzero). Each group is a star around its first node; group i > 0
// is joined to a random earlier group by a center-center edge.
inline StarLayout GenStarLayout(std::size_t n, std::uint64_t seed,
                                std::size_t parts = 0) {
  if (n < 2) Fail(ErrorKind::kInvalidArgument, "star needs n >= 2");
  Rng rng(seed);
  const std::size_t k = parts != 0
                            ? parts
                            : static_cast<std::size_t>(
                                  rng.UniformInt(1, std::min<std::size_t>(5, n)));
  if (k > n) Fail(ErrorKind::kInvalidArgument, "more star parts than nodes");
  std::vector<Index> order(n);
  for (Index i = 0; i < n; ++i) order[i] = i;
  rng.Shuffle(order);
  std::vector<std::size_t> cuts;
  {
    std::vector<std::size_t> positions(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) positions[i] = i + 1;
    rng.Shuffle(positions);
    cuts.assign(positions.begin(), positions.begin() + (k - 1));
    std::sort(cuts.begin(), cuts.end());
  }
  cuts.push_back(n);
  StarLayout out;
  internal::EdgeSetBuilder b(n);
  std::size_t start = 0;
  for (std::size_t cut : cuts) {
    std::vector<Index> group(order.begin() + static_cast<std::ptrdiff_t>(start),
                             order.begin() + static_cast<std::ptrdiff_t>(cut));
    const Index center = group.front();
    for (std::size_t i = 1; i < group.size(); ++i) b.Add(center, group[i]);
    out.centers.push_back(center);
    out.groups.push_back(std::move(group));
    start = cut;
  }
  for (std::size_t i = 1; i < out.centers.size(); ++i) {
    const auto j = static_cast<std::size_t>(rng.UniformInt(0, i - 1));
    b.Add(out.centers[i], out.centers[j]);
  }
  out.graph = b.Build();
  return out;
}

inline Graph GenStar(std::size_t n, std::uint64_t seed) {
  return GenStarLayout(n, seed).graph;
}

struct LobsterLayout {
  Graph graph;
  std::size_t backbone = 0;  // nodes [0, backbone) form the path
};

// Backbone path of m nodes (m uniform in [1, n-1] unless given), k branch
// nodes (k uniform in [1, n-m]) hung on uniform backbone nodes, remaining
// nodes hung on uniform branch nodes.
inline LobsterLayout GenLobsterLayout(std::size_t n, std::uint64_t seed,
                                      std::size_t backbone = 0) {
  if (n < 2) Fail(ErrorKind::kInvalidArgument, "lobster needs n >= 2");
  Rng rng(seed);
  const std::size_t m =
      backbone != 0 ? backbone
                    : static_cast<std::size_t>(rng.UniformInt(1, n - 1));
  if (m > n - 1) Fail(ErrorKind::kInvalidArgument, "backbone must be < n");
  const auto k = static_cast<std::size_t>(rng.UniformInt(1, n - m));
  internal::EdgeSetBuilder b(n);
  for (Index v = 1; v < m; ++v) b.Add(v - 1, v);
  for (std::size_t i = 0; i < k; ++i) {
    const auto v = static_cast<Index>(m + i);
    b.Add(static_cast<Index>(rng.UniformInt(0, m - 1)), v);
  }
  for (std::size_t v = m + k; v < n; ++v) {
    b.Add(static_cast<Index>(rng.UniformInt(m, m + k - 1)),
          static_cast<Index>(v));
  }
  return {b.Build(), m};
}

inline Graph GenLobster(std::size_t n, std::uint64_t seed) {
  return GenLobsterLayout(n, seed).graph;
}

// Uniform-ish random d-regular simple graph via the pairing model with
// restarts. Empty result if nd is odd or no simple pairing was found.
inline std::optional<Graph> GenRandomRegular(std::size_t n, std::size_t d,
                                             Rng& rng,
                                             std::size_t max_restarts = 1000) {
  if (d >= n || (n * d) % 2 != 0) return std::nullopt;
  std::vector<Index> points;
  for (Index v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < d; ++i) points.push_back(v);
  }
  for (std::size_t attempt = 0; attempt < max_restarts; ++attempt) {
    rng.Shuffle(points);
    internal::EdgeSetBuilder b(n);
    bool ok = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      if (!b.Add(points[i], points[i + 1])) {
        ok = false;
        break;
      }
    }
    if (ok) return b.Build();
  }
  return std::nullopt;
}

namespace internal {

// Number of internally vertex-disjoint s-t paths, stopping once `limit` is
// reached. Unit-capacity flow on the split graph (v_in -> v_out).
inline std::size_t LocalVertexConnectivity(
    const std::vector<std::vector<Index>>& adj, Index s, Index t,
    std::size_t limit) {
  const std::size_t n = adj.size();
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(2 * n);
  auto add = [&](int u, int v, int cap) {
    out[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap});
    out[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, 0});
  };
  const int big = static_cast<int>(n);
  for (std::size_t v = 0; v < n; ++v) {
    const int cap = (v == s || v == t) ? big : 1;
    add(static_cast<int>(2 * v), static_cast<int>(2 * v + 1), cap);
    for (Index w : adj[v]) {
      add(static_cast<int>(2 * v + 1), static_cast<int>(2 * w), 1);
    }
  }
  const int source = static_cast<int>(2 * s + 1);
  const int sink = static_cast<int>(2 * t);
  std::size_t flow = 0;
  std::vector<int> via(2 * n);
  while (flow < limit) {
    std::fill(via.begin(), via.end(), -1);
    std::deque<int> queue{source};
    via[source] = -2;
    while (!queue.empty() && via[sink] == -1) {
      const int u = queue.front();
      queue.pop_front();
      for (int id : out[u]) {
        if (arcs[id].cap > 0 && via[arcs[id].to] == -1) {
          via[arcs[id].to] = id;
          queue.push_back(arcs[id].to);
        }
      }
    }
    if (via[sink] == -1) break;
    for (int v = sink; v != source;) {
      const int id = via[v];
      arcs[id].cap -= 1;
      arcs[id ^ 1].cap += 1;
      v = arcs[id ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace internal

// True iff the graph stays connected after deleting any k-1 vertices and has
// more than k vertices. Any separator of size < k misses one of the first k
// vertices, so checking pairs that involve vertices 0..k-1 suffices.
inline bool IsKVertexConnected(const Graph& g, std::size_t k) {
  if (g.n <= k) return false;
  const auto adj = g.Adjacency();
  for (const auto& nb : adj) {
    if (nb.size() < k) return false;
  }
  std::vector<std::set<Index>> nbset(g.n);
  for (std::size_t v = 0; v < g.n; ++v) nbset[v].insert(adj[v].begin(), adj[v].end());
  for (Index s = 0; s < k; ++s) {
    for (Index t = 0; t < g.n; ++t) {
      if (t == s || nbset[s].count(t)) continue;
      if (internal::LocalVertexConnectivity(adj, s, t, k) < k) return false;
    }
  }
  return true;
}

inline constexpr std::size_t kPlanarAttempts = 100;

// Random cubic graph, accepted only if planar and 3-connected. Empty result
// after kPlanarAttempts rejected draws.
inline std::optional<Graph> Gen3ConPlanar(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < kPlanarAttempts; ++attempt) {
    auto g = GenRandomRegular(n, 3, rng);
    if (!g) return std::nullopt;
    if (IsPlanar(g->n, g->edges) && IsKVertexConnected(*g, 3)) return g;
  }
  return std::nullopt;
}

// Node weights, uniform on [0, 1).
inline std::vector<double> SampleWeights(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> w(n);
  for (double& x : w) x = rng.Uniform01();
  return w;
}

enum class Family { kBa, kBaBipartite, kEr, kStar, kLobster, kTriconnPlanar };

inline std::string_view FamilyName(Family f) {
  switch (f) {
    case Family::kBa: return "ba";
    case Family::kBaBipartite: return "ba_bipartite";
    case Family::kEr: return "er";
    case Family::kStar: return "star";
    case Family::kLobster: return "lobster";
    case Family::kTriconnPlanar: return "triconn_planar";
  }
  return "ba";
}

inline Family ParseFamily(std::string_view name) {
  if (name == "ba") return Family::kBa;
  if (name == "ba_bipartite") return Family::kBaBipartite;
  if (name == "er") return Family::kEr;
  if (name == "star") return Family::kStar;
  if (name == "lobster") return Family::kLobster;
  if (name == "triconn_planar" || name == "3con") return Family::kTriconnPlanar;
  Fail(ErrorKind::kInvalidArgument, "unknown family '" + std::string(name) + "'");
}

struct GenSpec {
  Family family = Family::kBa;
  std::size_t n = 16;
  std::size_t b = 5;             // ba_bipartite
  double p_lo = 0.2;             // er
  double p_hi = 0.8;
  std::size_t attach_lo = 1;     // ba
  std::size_t attach_hi = 10;
  std::uint64_t seed = 0;

  void Validate() const {
    if (n < 2) Fail(ErrorKind::kInvalidArgument, "graph size must be >= 2");
    if (b < 1) Fail(ErrorKind::kInvalidArgument, "b must be >= 1");
    if (!(0.0 <= p_lo && p_lo <= p_hi && p_hi <= 1.0)) {
      Fail(ErrorKind::kInvalidArgument, "edge probability outside [0, 1]");
    }
  }
};

}  // namespace pdlab

#endif  // PDLAB_GRAPHS_HPP_
