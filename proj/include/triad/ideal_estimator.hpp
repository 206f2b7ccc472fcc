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

// Three-pass triangle estimator for streams that come with a free degree
// oracle. One instance picks an edge e with probability d_e / d_E, a
// uniform w in N(e), and checks whether {e, w} closes a triangle that the
// lowest-degree rule assigns to e; X = d_E * [yes] has E[X] = T and
// Var[X] <= d_E * T.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "triad/common.hpp"
#include "triad/edge_stream.hpp"
#include "triad/graph.hpp"
#include "triad/random.hpp"
#include "triad/sampling.hpp"
#include "triad/stats.hpp"

namespace triad {

// Exact vertex degrees served from an in-memory graph; queries are counted
// but cost nothing else.
class DegreeOracle {
 public:
  explicit DegreeOracle(const Graph& g) : graph_(&g) {}

  Count degree(VertexId v) const {
    ++queries_;
    return graph_->degree(v);
  }

  const Graph& graph() const { return *graph_; }
  Count queries() const { return queries_; }

 private:
  const Graph* graph_;
  mutable Count queries_ = 0;
};

// The deterministic rule used in oracle mode: a triangle belongs to its
// edge of smallest d_e, ties going to the canonically smallest edge.
inline Edge lowest_degree_edge(const Triangle& t, const DegreeOracle& oracle) {
  std::array<Count, 3> deg{};
  for (int i = 0; i < 3; ++i) deg[i] = oracle.degree(t.v[i]);
  const auto edges = t.edges();
  // edges() order is {0,1}, {0,2}, {1,2}
  const std::array<Count, 3> d_e{std::min(deg[0], deg[1]), std::min(deg[0], deg[2]), std::min(deg[1], deg[2])};
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (d_e[i] < d_e[best]) best = i;
  }
  return edges[best];
}

struct IdealBatch {
  std::vector<Count> xs;    // one X per instance, each 0 or d_E
  Count d_E = 0;
  Count triangles_found = 0;
  Count passes = 0;
};

// Runs k instances on three shared physical passes.
inline IdealBatch run_ideal_instances(EdgeStream& stream, const DegreeOracle& oracle, std::size_t k,
                                      std::uint64_t seed) {
  const Count passes_before = stream.passes();
  IdealBatch out;
  out.xs.assign(k, 0);

  // Pass 1: one weighted size-1 reservoir per instance. Edge j replaces the
  // held edge with probability d_e / (sum of d over edges so far).
  std::vector<KeyedRng> rngs;
  rngs.reserve(k);
  for (std::size_t i = 0; i < k; ++i) rngs.emplace_back(seed, Role::kIdealEdge, i);
  std::vector<Edge> picked(k);
  std::vector<Count> picked_deg_u(k), picked_deg_v(k);
  Count total = 0;
  run_pass(stream, [&](const Edge& e) {
    const Count du = oracle.degree(e.u);
    const Count dv = oracle.degree(e.v);
    const Count w = std::min(du, dv);
    total += w;
    for (std::size_t i = 0; i < k; ++i) {
      if (rngs[i].below(total) < w) {
        picked[i] = e;
        picked_deg_u[i] = du;
        picked_deg_v[i] = dv;
      }
    }
  });
  if (total == 0) throw InputError("ideal estimator needs at least one edge");
  out.d_E = total;

  // Pass 2: a uniform neighbor of each picked edge's anchor.
  std::vector<NeighborRequest> requests;
  requests.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    requests.push_back({picked[i], anchor_of(picked[i], picked_deg_u[i], picked_deg_v[i]), 1});
  }
  NeighborSampler sampler(requests, seed, Role::kIdealNeighbor);
  run_pass(stream, [&](const Edge& e) { sampler.on_edge(e); });
  const auto sampled = sampler.results();

  // Pass 3: does {other endpoint, w} exist?
  ClosureQuery query;
  std::vector<std::ptrdiff_t> pair_of(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    if (sampled[i].empty()) continue;
    const VertexId anchor = requests[i].anchor;
    const VertexId other = picked[i].other(anchor);
    const VertexId w = sampled[i][0];
    if (w == other) continue;
    pair_of[i] = static_cast<std::ptrdiff_t>(query.pairs.size());
    query.pairs.emplace_back(other, w);
  }
  ClosureChecker checker(query);
  run_pass(stream, [&](const Edge& e) { checker.on_edge(e); });

  for (std::size_t i = 0; i < k; ++i) {
    if (pair_of[i] < 0 || !checker.present(query.pairs[static_cast<std::size_t>(pair_of[i])])) continue;
    ++out.triangles_found;
    const Triangle t(picked[i].u, picked[i].v, sampled[i][0]);
    if (lowest_degree_edge(t, oracle) == picked[i]) out.xs[i] = out.d_E;
  }
  out.passes = stream.passes() - passes_before;
  return out;
}

// A single instance; three passes.
inline Count ideal_estimate_once(EdgeStream& stream, const DegreeOracle& oracle, std::uint64_t seed) {
  return run_ideal_instances(stream, oracle, 1, seed).xs[0];
}

struct IdealConfig {
  double epsilon = 0.25;
  double t_hat = 0;      // a-priori lower bound on T
  double c = 4.0;        // group size multiplier
  std::size_t groups = 7;
};

struct IdealRun {
  double estimate = 0;
  std::size_t group_size = 0;
  std::size_t groups = 0;
  std::vector<Count> xs;
  Count d_E = 0;
  Count triangles_found = 0;
  Count passes = 0;
  Count oracle_queries = 0;
};

// Median of the group means of groups * ceil(c d_E / (eps^2 T_hat))
// instances, all multiplexed onto the same three passes.
//
// The instance count depends on d_E before pass 1 starts; it is read from
// the oracle's graph, which in this model is free.
inline IdealRun ideal_estimate(EdgeStream& stream, const DegreeOracle& oracle, const IdealConfig& config,
                               std::uint64_t seed) {
  if (!(config.t_hat >= 1)) throw ConfigError("ideal estimator requires t_hat >= 1");
  if (!(config.epsilon > 0 && config.epsilon < 1)) throw ConfigError("ideal estimator requires 0 < epsilon < 1");
  if (config.groups == 0 || !(config.c > 0)) throw ConfigError("ideal estimator requires groups >= 1 and c > 0");
  const Count d_E = sum_edge_degrees(oracle.graph());
  if (d_E == 0) throw InputError("ideal estimator needs at least one edge");

  IdealRun run;
  run.groups = config.groups;
  run.group_size = static_cast<std::size_t>(
      std::ceil(config.c * static_cast<double>(d_E) / (config.epsilon * config.epsilon * config.t_hat)));
  run.group_size = std::max<std::size_t>(run.group_size, 1);
  const Count queries_before = oracle.queries();
  IdealBatch batch = run_ideal_instances(stream, oracle, run.groups * run.group_size, seed);
  run.xs = std::move(batch.xs);
  run.d_E = batch.d_E;
  run.triangles_found = batch.triangles_found;
  run.passes = batch.passes;
  run.oracle_queries = oracle.queries() - queries_before;

  std::vector<double> values(run.xs.begin(), run.xs.end());
  run.estimate = median_of_means(values, run.groups);
  return run;
}

}  // namespace triad
