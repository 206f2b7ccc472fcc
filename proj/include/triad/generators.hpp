// Copyright 2026 The Triad Authors
//
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "triad/common.hpp"
#include "triad/graph.hpp"
#include "triad/random.hpp"

namespace triad {

struct GroundTruth {
  Count n = 0;
  Count m = 0;
  Count T = 0;
  Count kappa = 0;

  friend bool operator==(const GroundTruth&, const GroundTruth&) = default;
};

struct GeneratedGraph {
  Graph graph;
  GroundTruth truth;
};

// Ground truth computed by the exact oracles.
inline GroundTruth measure(const Graph& g) {
  return {g.n(), g.m(), triangles_exact_cn(g), degeneracy(g)};
}

// Cycle on vertices 1..n-1 plus hub 0 joined to every cycle vertex.
inline GeneratedGraph gen_wheel(Count n) {
  if (n < 4) throw ConfigError("wheel needs n >= 4");
  std::vector<Edge> edges;
  edges.reserve(2 * (n - 1));
  for (VertexId i = 1; i < n; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i + 1 < n ? i + 1 : 1);
  }
  // n = 4 is K4, whose rim is itself a triangle.
  const Count T = n == 4 ? 4 : n - 1;
  return {Graph::from_edges(n, edges), {n, 2 * (n - 1), T, 3}};
}

// Spine {0, 1} and pages 2..k+1, each adjacent to both spine vertices.
inline GeneratedGraph gen_book(Count k) {
  if (k < 1) throw ConfigError("book needs k >= 1");
  std::vector<Edge> edges;
  edges.reserve(2 * k + 1);
  edges.emplace_back(0, 1);
  for (VertexId page = 2; page < k + 2; ++page) {
    edges.emplace_back(0, page);
    edges.emplace_back(1, page);
  }
  return {Graph::from_edges(k + 2, edges), {k + 2, 2 * k + 1, k, 2}};
}

enum class DisjKind { kYes, kNo };

// Two-party set-disjointness input laid out as a graph: a complete
// bipartite core A x B and N blocks of q vertices; block i is joined to
// all of A when x_i = 1 and to all of B when y_i = 1.
struct LbInstanceSpec {
  Count p = 0;
  Count q = 0;
  Count N = 0;
  std::vector<bool> x;
  std::vector<bool> y;
  DisjKind kind = DisjKind::kYes;

  Count shared() const {
    Count c = 0;
    for (Count i = 0; i < N; ++i) c += (x[i] && y[i]) ? 1 : 0;
    return c;
  }

  void validate() const {
    if (p == 0 || q == 0) throw ConfigError("lb instance needs p, q >= 1");
    if (N == 0 || N % 3 != 0) throw ConfigError("lb instance needs N divisible by 3");
    if (x.size() != N || y.size() != N) throw ConfigError("lb strings must have N bits");
    const auto ones = [](const std::vector<bool>& s) { return static_cast<Count>(std::count(s.begin(), s.end(), true)); };
    if (ones(x) != N / 3 || ones(y) != N / 3) throw ConfigError("lb strings must have exactly N/3 ones");
    if (kind == DisjKind::kYes && shared() != 0) throw ConfigError("YES instance strings intersect");
    if (kind == DisjKind::kNo && shared() == 0) throw ConfigError("NO instance strings are disjoint");
  }
};

// Draws x and y with N/3 ones each. NO instances share exactly `shared`
// indices (default 1); YES instances share none.
inline LbInstanceSpec make_lb_spec(Count p, Count q, Count N, DisjKind kind, std::uint64_t seed, Count shared = 1) {
  if (N == 0 || N % 3 != 0) throw ConfigError("lb instance needs N divisible by 3");
  const Count ones = N / 3;
  if (kind == DisjKind::kYes) shared = 0;
  if (kind == DisjKind::kNo && (shared == 0 || shared > ones)) throw ConfigError("NO instance needs 1 <= shared <= N/3");
  KeyedRng rng(seed, Role::kDisjStrings);
  std::vector<Count> order(N);
  std::iota(order.begin(), order.end(), Count{0});
  shuffle_deterministic(order.begin(), order.end(), rng);

  LbInstanceSpec spec;
  spec.p = p;
  spec.q = q;
  spec.N = N;
  spec.kind = kind;
  spec.x.assign(N, false);
  spec.y.assign(N, false);
  // order = [shared | x only | y only | neither]
  Count at = 0;
  for (Count i = 0; i < shared; ++i, ++at) spec.x[order[at]] = spec.y[order[at]] = true;
  for (Count i = shared; i < ones; ++i, ++at) spec.x[order[at]] = true;
  for (Count i = shared; i < ones; ++i, ++at) spec.y[order[at]] = true;
  return spec;
}

// Vertex layout: A = [0, p), B = [p, 2p), block i = [2p + i q, 2p + (i+1) q).
// Blocks are independent sets and A, B carry no internal edges, so every
// triangle is (a, b, w) with w in a block shared by x and y.
inline GeneratedGraph gen_lb_instance(const LbInstanceSpec& spec) {
  spec.validate();
  const Count p = spec.p;
  const Count q = spec.q;
  const Count n = 2 * p + spec.N * q;
  std::vector<Edge> edges;
  for (VertexId a = 0; a < p; ++a) {
    for (VertexId b = p; b < 2 * p; ++b) edges.emplace_back(a, b);
  }
  for (Count i = 0; i < spec.N; ++i) {
    const VertexId base = 2 * p + i * q;
    for (VertexId w = base; w < base + q; ++w) {
      if (spec.x[i]) {
        for (VertexId a = 0; a < p; ++a) edges.emplace_back(a, w);
      }
      if (spec.y[i]) {
        for (VertexId b = p; b < 2 * p; ++b) edges.emplace_back(b, w);
      }
    }
  }
  GeneratedGraph out{Graph::from_edges(n, edges), {}};
  out.truth.n = n;
  out.truth.m = p * p + 2 * (spec.N / 3) * p * q;
  out.truth.T = spec.shared() * p * p * q;
  out.truth.kappa = spec.kind == DisjKind::kYes ? p : degeneracy(out.graph);
  return out;
}

// Degree-proportional attachment. Vertices 0..attach form a clique; each
// later vertex joins `attach` distinct earlier vertices chosen with
// probability proportional to degree. Every vertex has at most `attach`
// earlier neighbors, so the degeneracy is at most `attach`.
inline Graph gen_preferential_attachment(Count n, Count attach, std::uint64_t seed) {
  if (attach < 1 || n <= attach) throw ConfigError("preferential attachment needs n > attach >= 1");
  KeyedRng rng(seed, Role::kGenerator, 1);
  std::vector<Edge> edges;
  std::vector<VertexId> endpoints;  // each vertex listed once per incident edge
  for (VertexId v = 1; v <= attach; ++v) {
    for (VertexId u = 0; u < v; ++u) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<VertexId> targets;
  for (VertexId v = attach + 1; v < n; ++v) {
    targets.clear();
    while (targets.size() < attach) {
      const VertexId t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    std::sort(targets.begin(), targets.end());
    for (VertexId t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(n, edges);
}

// G(n, prob): every pair present independently.
inline Graph gen_erdos_renyi(Count n, double prob, std::uint64_t seed) {
  if (!(prob >= 0.0 && prob <= 1.0)) throw ConfigError("erdos-renyi needs 0 <= prob <= 1");
  KeyedRng rng(seed, Role::kGenerator, 2);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.uniform() < prob) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

inline Graph gen_complete(Count k) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < k; ++u) {
    for (VertexId v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(k, edges);
}

}  // namespace triad
