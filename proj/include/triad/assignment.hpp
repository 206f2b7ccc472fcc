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

// Assigning discovered triangles to edges.
//
// For a triangle, every edge f gets an estimate Y_f of its triangle count
// t_f from s sampled wedges at its anchor, Y_f = (d_f / s) * closed. Edges
// with d_f above m kappa^2 / (eps^2 T) are not sampled and get Y_f = inf.
// The triangle goes to the edge of smallest Y_f unless that minimum exceeds
// kappa / (2 eps), in which case it stays unassigned. A memo table makes
// the decision for each triangle final the first time it is taken.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "triad/common.hpp"
#include "triad/edge_stream.hpp"
#include "triad/random.hpp"
#include "triad/sampling.hpp"

namespace triad {

// A closed wedge: the sorted triple plus the exact degree of each vertex,
// from which every edge's d_e and anchor follow.
struct TriangleRecord {
  Triangle tri;
  std::array<Count, 3> degree{};  // aligned with tri.v
  std::size_t origin = 0;         // index of the loop draw that found it

  // Slots follow Triangle::edges(): 0 = {v0,v1}, 1 = {v0,v2}, 2 = {v1,v2}.
  static constexpr std::array<std::array<int, 2>, 3> kEnds{{{0, 1}, {0, 2}, {1, 2}}};

  Edge edge(int slot) const { return tri.edges()[static_cast<std::size_t>(slot)]; }
  Count d_e(int slot) const {
    const auto [a, b] = kEnds[static_cast<std::size_t>(slot)];
    return std::min(degree[static_cast<std::size_t>(a)], degree[static_cast<std::size_t>(b)]);
  }
  VertexId anchor(int slot) const {
    const auto [a, b] = kEnds[static_cast<std::size_t>(slot)];
    return anchor_of(edge(slot), degree[static_cast<std::size_t>(a)], degree[static_cast<std::size_t>(b)]);
  }
};

struct AssignmentParams {
  Count m = 0;
  double epsilon = 0;
  double t_hat = 0;
  double kappa_hat = 0;
  Count s = 1;

  // Edges with d_e above this get Y = inf without sampling.
  double degree_threshold() const { return static_cast<double>(m) * kappa_hat * kappa_hat / (epsilon * epsilon * t_hat); }
  // A triangle whose smallest Y exceeds this stays unassigned.
  double reject_threshold() const { return kappa_hat / (2.0 * epsilon); }
};

// s = ceil(c_s log2(n) / eps^2 * m kappa / T), at least 1, and at most
// max_degree when it is known.
inline Count compute_s(Count n, Count m, double epsilon, double t_hat, double kappa_hat, double c_s,
                       std::optional<Count> max_degree = std::nullopt) {
  if (!(t_hat > 0)) throw ConfigError("t_hat must be positive");
  if (!(epsilon > 0)) throw ConfigError("epsilon must be positive");
  const double raw = c_s * std::log2(static_cast<double>(std::max<Count>(n, 1))) / (epsilon * epsilon) *
                     static_cast<double>(m) * kappa_hat / t_hat;
  Count s = raw >= 0x1.0p62 ? (Count{1} << 62) : static_cast<Count>(std::ceil(raw));
  s = std::max<Count>(s, 1);
  if (max_degree) s = std::min(s, std::max<Count>(*max_degree, 1));
  return s;
}

// Triangle -> edge or unassigned. Insert-only within one run.
class AssignmentTable {
 public:
  using Value = std::optional<Edge>;

  const Value* find(const Triangle& t) const {
    auto it = entries_.find(t);
    return it == entries_.end() ? nullptr : &it->second;
  }

  void record(const Triangle& t, Value value) {
    auto [it, inserted] = entries_.emplace(t, value);
    if (!inserted && it->second != value) throw std::logic_error("assignment table entries are write-once");
  }

  std::size_t size() const { return entries_.size(); }
  const std::map<Triangle, Value>& entries() const { return entries_; }

 private:
  std::map<Triangle, Value> entries_;
};

struct WedgeTally {
  Count samples = 0;  // wedges examined (s, or d_e for a full scan)
  Count closed = 0;   // of those, how many closed into a triangle
};

struct EdgeEstimate {
  Edge edge;
  Count d_e = 0;
  double y = 0;  // +inf when the degree threshold trips
};

inline std::array<EdgeEstimate, 3> edge_estimates(const TriangleRecord& rec,
                                                  const std::array<std::optional<WedgeTally>, 3>& wedges,
                                                  const AssignmentParams& params) {
  std::array<EdgeEstimate, 3> out;
  const double cutoff = params.degree_threshold();
  for (int slot = 0; slot < 3; ++slot) {
    auto& est = out[static_cast<std::size_t>(slot)];
    est.edge = rec.edge(slot);
    est.d_e = rec.d_e(slot);
    if (static_cast<double>(est.d_e) > cutoff) {
      est.y = std::numeric_limits<double>::infinity();
      continue;
    }
    const auto& tally = wedges[static_cast<std::size_t>(slot)];
    if (!tally || tally->samples == 0) {
      throw std::logic_error("missing wedge samples for an edge under the degree threshold");
    }
    est.y = static_cast<double>(est.d_e) / static_cast<double>(tally->samples) * static_cast<double>(tally->closed);
  }
  return out;
}

// Decides (or recalls) which edge of rec.tri the triangle is assigned to.
// Ties on the minimum Y go to the canonically smallest edge.
inline std::optional<Edge> assignment(const TriangleRecord& rec,
                                      const std::array<std::optional<WedgeTally>, 3>& wedges,
                                      const AssignmentParams& params, AssignmentTable& table) {
  if (const auto* memo = table.find(rec.tri)) return *memo;
  const auto estimates = edge_estimates(rec, wedges, params);
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (estimates[i].y < estimates[best].y) best = i;
  }
  std::optional<Edge> result;
  if (!(estimates[best].y > params.reject_threshold())) result = estimates[best].edge;
  table.record(rec.tri, result);
  return result;
}

// YES iff the table assigns t to e. Throws InputError when e is not an
// edge of t. Only consults the table, so assignment() must have run.
inline bool is_assigned(const Triangle& t, const Edge& e, const AssignmentTable& table) {
  if (t.edge_slot(e) < 0) throw InputError("edge is not part of the triangle");
  const auto* memo = table.find(t);
  if (memo == nullptr) throw std::logic_error("triangle has no assignment decision yet");
  return memo->has_value() && **memo == e;
}

// Passes 5 and 6 of the estimator: gather wedge samples for every edge of
// every undecided triangle, then close them, then decide.
//
// For an edge with s >= d_f the anchor's whole neighborhood is scanned
// instead (sampling without replacement at full size), so Y_f = t_f
// exactly. If the total wedge budget would exceed m, pass 5 instead
// collects the full neighborhoods of all triangle vertices and every Y_f
// is computed exactly from them; pass 6 then has nothing to do.
class AssignmentPasses {
 public:
  AssignmentPasses(std::span<const TriangleRecord> records, const AssignmentParams& params,
                   const AssignmentTable& table, std::uint64_t seed, Count wedge_cap)
      : records_(records.begin(), records.end()), params_(params) {
    const double cutoff = params.degree_threshold();
    Count budget = 0;
    for (std::size_t k = 0; k < records_.size(); ++k) {
      if (table.find(records_[k].tri) != nullptr) continue;
      for (int slot = 0; slot < 3; ++slot) {
        const Count d = records_[k].d_e(slot);
        if (static_cast<double>(d) > cutoff) continue;
        budget += std::min(params.s, d);
        work_.push_back({k, slot});
      }
    }
    if (budget > wedge_cap) {
      whole_neighborhoods_ = true;
      for (const auto& item : work_) {
        const Edge f = records_[item.record].edge(item.slot);
        collector_.want(f.u);
        collector_.want(f.v);
      }
      return;
    }
    std::vector<NeighborRequest> requests;
    for (const auto& item : work_) {
      const auto& rec = records_[item.record];
      const Count d = rec.d_e(item.slot);
      if (params.s >= d) {
        collector_.want(rec.anchor(item.slot));
      } else {
        requests.push_back({rec.edge(item.slot), rec.anchor(item.slot), static_cast<std::size_t>(params.s)});
      }
    }
    // Substream ids are positions within this request list.
    sampler_ = NeighborSampler(requests, seed, Role::kAssignmentSample);
  }

  bool whole_neighborhoods() const { return whole_neighborhoods_; }
  bool idle() const { return work_.empty(); }

  void on_pass5_edge(const Edge& e) {
    sampler_.on_edge(e);
    collector_.on_edge(e);
  }

  void finish_pass5() {
    if (whole_neighborhoods_) return;
    sampled_ = sampler_.results();
    ClosureQuery query;
    std::size_t next_request = 0;
    for (auto& item : work_) {
      const auto& rec = records_[item.record];
      const Edge f = rec.edge(item.slot);
      const VertexId anchor = rec.anchor(item.slot);
      const VertexId other = f.other(anchor);
      if (params_.s >= rec.d_e(item.slot)) {
        for (VertexId w : collector_.neighbors(anchor)) {
          if (w != other) query.pairs.emplace_back(other, w);
        }
      } else {
        item.request = next_request++;
        for (VertexId w : sampled_[item.request]) {
          if (w != other) query.pairs.emplace_back(other, w);
        }
      }
    }
    checker_ = ClosureChecker(query);
  }

  void on_pass6_edge(const Edge& e) {
    if (!whole_neighborhoods_) checker_.on_edge(e);
  }

  // Writes a decision for every undecided triangle into the table.
  void finish_pass6(AssignmentTable& table) {
    std::vector<std::array<std::optional<WedgeTally>, 3>> tallies(records_.size());
    for (const auto& item : work_) {
      const auto& rec = records_[item.record];
      const Edge f = rec.edge(item.slot);
      const VertexId anchor = rec.anchor(item.slot);
      const VertexId other = f.other(anchor);
      WedgeTally tally;
      if (whole_neighborhoods_) {
        tally.samples = rec.d_e(item.slot);
        tally.closed = common_neighbors(f.u, f.v);
      } else if (params_.s >= rec.d_e(item.slot)) {
        for (VertexId w : collector_.neighbors(anchor)) {
          ++tally.samples;
          if (w != other && checker_.present(Edge(other, w))) ++tally.closed;
        }
      } else {
        for (VertexId w : sampled_[item.request]) {
          ++tally.samples;
          if (w != other && checker_.present(Edge(other, w))) ++tally.closed;
        }
      }
      tallies[item.record][static_cast<std::size_t>(item.slot)] = tally;
    }
    for (std::size_t k = 0; k < records_.size(); ++k) {
      assignment(records_[k], tallies[k], params_, table);
    }
  }

  std::size_t stored() const {
    return sampler_.slot_count() + collector_.stored() + checker_.stored();
  }

 private:
  struct WorkItem {
    std::size_t record = 0;
    int slot = 0;
    std::size_t request = 0;
  };

  Count common_neighbors(VertexId a, VertexId b) const {
    std::vector<VertexId> na = collector_.neighbors(a);
    std::vector<VertexId> nb = collector_.neighbors(b);
    std::sort(na.begin(), na.end());
    std::sort(nb.begin(), nb.end());
    std::vector<VertexId> both;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(both));
    return both.size();
  }

  std::vector<TriangleRecord> records_;
  AssignmentParams params_;
  std::vector<WorkItem> work_;
  bool whole_neighborhoods_ = false;
  NeighborSampler sampler_;
  NeighborhoodCollector collector_;
  std::vector<std::vector<VertexId>> sampled_;
  ClosureChecker checker_;
};

// Standalone two-pass driver: decides every record's triangle.
inline void assign_triangles(EdgeStream& stream, std::span<const TriangleRecord> records,
                             const AssignmentParams& params, AssignmentTable& table, std::uint64_t seed,
                             Count wedge_cap = std::numeric_limits<Count>::max()) {
  AssignmentPasses passes(records, params, table, seed, wedge_cap);
  run_pass(stream, [&](const Edge& e) { passes.on_pass5_edge(e); });
  passes.finish_pass5();
  run_pass(stream, [&](const Edge& e) { passes.on_pass6_edge(e); });
  passes.finish_pass6(table);
}

}  // namespace triad
