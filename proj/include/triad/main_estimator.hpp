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

// Six-pass streaming triangle estimator for graphs of bounded degeneracy.
//
//   pass 1  R: r uniform edges, with replacement
//   pass 2  exact d_e for every e in R, d_R = sum of d_e
//           ell draws from R with probability d_e / d_R (no pass)
//   pass 3  one uniform neighbor w of each drawn edge's anchor
//   pass 4  close {other endpoint, w}; exact degree of every w
//   pass 5  wedge samples for the edges of every discovered triangle
//   pass 6  close those wedges, assign triangles to edges
//
// Y_i = 1 iff draw i closed a triangle assigned to the drawn edge, and the
// repetition returns X = (m / r) d_R (1 / ell) sum Y_i. The final estimate
// is the median of X over independent repetitions.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "triad/assignment.hpp"
#include "triad/common.hpp"
#include "triad/edge_list.hpp"
#include "triad/edge_stream.hpp"
#include "triad/graph.hpp"
#include "triad/random.hpp"
#include "triad/sampling.hpp"
#include "triad/stats.hpp"

namespace triad {

inline constexpr int kMainPasses = 6;

struct EstimatorConfig {
  double epsilon = 0.2;
  double t_hat = 0;      // a-priori lower bound on T
  double kappa_hat = 0;  // upper bound on the degeneracy
  double c_r = 7;
  double c_ell = 21;
  double c_s = 61;
  double scale = 1.0;    // multiplies c_r, c_ell and c_s
  std::size_t repetitions = 1;
  std::uint64_t seed = 0;
  bool share_passes = false;
  double abort_multiplier = 10;  // 0 disables the abort check
  bool allow_exact_fallback = true;

  void validate() const {
    if (!(epsilon > 0 && epsilon < 0.5)) throw ConfigError("epsilon must lie in (0, 1/2)");
    if (!(t_hat >= 1)) throw ConfigError("t_hat must be at least 1");
    if (!(kappa_hat >= 1)) throw ConfigError("kappa_hat must be at least 1");
    if (!(c_r > 6)) throw ConfigError("c_r must exceed 6");
    if (!(c_ell > 20)) throw ConfigError("c_ell must exceed 20");
    if (!(c_s > 60)) throw ConfigError("c_s must exceed 60");
    if (!(scale > 0 && scale <= 1)) throw ConfigError("scale must lie in (0, 1]");
    if (repetitions == 0 || repetitions % 2 == 0) throw ConfigError("repetitions must be odd");
    if (!(abort_multiplier >= 0)) throw ConfigError("abort_multiplier must be non-negative");
  }

  // Below the constants and epsilon range the guarantees are stated for.
  bool sub_theoretical() const { return scale < 1.0 || epsilon >= 1.0 / 6.0; }
};

// Lower bound on the fraction of triangles the assignment rule covers,
// used in place of the unknown assigned total.
inline double assigned_fraction_floor(double epsilon) { return 1.0 - 2.0 * epsilon; }

// Uncapped r = c_r log2(n) / eps^2 * m (kappa / eps) / ((1 - 2 eps) T_hat).
inline double compute_r_raw(Count n, Count m, double epsilon, double t_hat, double kappa_hat, double c_r) {
  if (!(t_hat > 0)) throw ConfigError("t_hat must be positive");
  return c_r * std::log2(static_cast<double>(std::max<Count>(n, 1))) / (epsilon * epsilon) * static_cast<double>(m) *
         (kappa_hat / epsilon) / (assigned_fraction_floor(epsilon) * t_hat);
}

// r rounded up, at least 1, capped at m.
inline Count compute_r(Count n, Count m, double epsilon, double t_hat, double kappa_hat, double c_r) {
  const double raw = compute_r_raw(n, m, epsilon, t_hat, kappa_hat, c_r);
  const double capped = std::min(std::ceil(raw), static_cast<double>(std::max<Count>(m, 1)));
  return std::max<Count>(static_cast<Count>(capped), 1);
}

// ell = c_ell log2(n) / eps^2 * m d_R / (r (1 - 2 eps) T_hat), rounded up.
// Not capped here; the estimator caps it at m.
inline Count compute_ell(Count n, Count m, double epsilon, double t_hat, Count r, Count d_R, double c_ell) {
  if (!(t_hat > 0)) throw ConfigError("t_hat must be positive");
  if (d_R == 0) throw InputError("compute_ell requires d_R > 0");
  const double raw = c_ell * std::log2(static_cast<double>(std::max<Count>(n, 1))) / (epsilon * epsilon) *
                     static_cast<double>(m) * static_cast<double>(d_R) /
                     (static_cast<double>(r) * assigned_fraction_floor(epsilon) * t_hat);
  if (raw >= 0x1.0p62) return Count{1} << 62;
  return std::max<Count>(static_cast<Count>(std::ceil(raw)), 1);
}

struct RepetitionReport {
  double x = 0;
  std::uint64_t seed = 0;
  Count r = 0;
  Count ell = 0;
  Count s = 0;
  Count d_R = 0;
  Count assignment_calls = 0;    // draws that closed a triangle
  Count assigned_hits = 0;       // of those, assigned to the drawn edge
  Count triangles_discovered = 0;
  Count memo_size = 0;
  Count stored_peak = 0;
  bool exact_fallback = false;
  bool sparse_sample = false;    // d_R = 0
  bool ell_capped = false;
  bool wedge_capped = false;
  bool aborted = false;
};

// Test hooks: pin R instead of sampling it, or pre-seed the memo table.
struct RepetitionOptions {
  std::optional<std::vector<Edge>> fixed_sample;
  std::optional<AssignmentTable> preset_table;
};

// One repetition as a pass-driven state machine, so several repetitions
// can share physical passes.
class Repetition {
 public:
  Repetition(StreamStats stats, const EstimatorConfig& config, std::uint64_t seed, RepetitionOptions options = {})
      : stats_(stats), config_(config), options_(std::move(options)) {
    report_.seed = seed;
    if (options_.preset_table) table_ = *options_.preset_table;
    const double c_r = config.c_r * config.scale;
    report_.s = compute_s(stats.n, stats.m, config.epsilon, config.t_hat, config.kappa_hat, config.c_s * config.scale);
    if (stats.m == 0) {
      report_.sparse_sample = true;
      done_ = true;
      return;
    }
    if (options_.fixed_sample) {
      if (options_.fixed_sample->empty()) throw InputError("fixed sample must be non-empty");
      report_.r = options_.fixed_sample->size();
      return;
    }
    const double raw = compute_r_raw(stats.n, stats.m, config.epsilon, config.t_hat, config.kappa_hat, c_r);
    report_.r = compute_r(stats.n, stats.m, config.epsilon, config.t_hat, config.kappa_hat, c_r);
    if (config.allow_exact_fallback && std::ceil(raw) >= static_cast<double>(stats.m)) {
      report_.exact_fallback = true;
      report_.r = stats.m;
      return;
    }
    std::vector<KeyedRng> rngs;
    rngs.reserve(report_.r);
    for (Count i = 0; i < report_.r; ++i) rngs.emplace_back(seed, Role::kEdgeSample, i);
    reservoir_ = UniformReservoirBank<Edge>(std::move(rngs));
    note_stored(report_.r);
  }

  void on_edge(int pass, const Edge& e) {
    if (done_) return;
    switch (pass) {
      case 1:
        if (report_.exact_fallback) {
          stored_edges_.push_back(e);
        } else if (!options_.fixed_sample) {
          reservoir_.offer(e);
        }
        break;
      case 2:
        count_degree(e.u);
        count_degree(e.v);
        break;
      case 3:
        neighbors_.on_edge(e);
        break;
      case 4:
        closure_.on_edge(e);
        break;
      case 5:
        assigner_->on_pass5_edge(e);
        break;
      case 6:
        assigner_->on_pass6_edge(e);
        break;
      default:
        throw UsageError("pass index out of range");
    }
  }

  void finish_pass(int pass) {
    if (done_) return;
    switch (pass) {
      case 1: finish_sample(); break;
      case 2: finish_degrees(); break;
      case 3: finish_neighbors(); break;
      case 4: finish_closure(); break;
      case 5:
        assigner_->finish_pass5();
        note_stored(base_stored() + 3 * records_.size() + table_.size() + assigner_->stored());
        break;
      case 6: finish_assignment(); break;
      default: throw UsageError("pass index out of range");
    }
  }

  const RepetitionReport& report() const { return report_; }
  const AssignmentTable& table() const { return table_; }

 private:
  void note_stored(std::size_t items) { report_.stored_peak = std::max<Count>(report_.stored_peak, items); }

  std::size_t base_stored() const { return sample_.size() + degrees_.size() + draws_.size(); }

  void count_degree(VertexId v) {
    if (auto it = degrees_.find(v); it != degrees_.end()) ++it->second;
  }

  void finish_sample() {
    if (report_.exact_fallback) {
      note_stored(stored_edges_.size());
      IdMap ids([&] {
        std::vector<std::uint64_t> v;
        for (const Edge& e : stored_edges_) {
          v.push_back(e.u);
          v.push_back(e.v);
        }
        return v;
      }());
      std::vector<Edge> dense;
      dense.reserve(stored_edges_.size());
      for (const Edge& e : stored_edges_) dense.emplace_back(ids.to_dense(e.u), ids.to_dense(e.v));
      const Graph g = Graph::from_edges(ids.size(), dense);
      report_.x = static_cast<double>(triangles_exact_cn(g));
      stored_edges_.clear();
      stored_edges_.shrink_to_fit();
      done_ = true;
      return;
    }
    sample_ = options_.fixed_sample ? *options_.fixed_sample : reservoir_.values();
    reservoir_ = {};
    for (const Edge& e : sample_) {
      degrees_.try_emplace(e.u, 0);
      degrees_.try_emplace(e.v, 0);
    }
    note_stored(sample_.size() + degrees_.size());
  }

  void finish_degrees() {
    sample_degree_.reserve(sample_.size());
    for (const Edge& e : sample_) {
      const Count d = std::min(degrees_.at(e.u), degrees_.at(e.v));
      sample_degree_.push_back(d);
      report_.d_R += d;
    }
    if (report_.d_R == 0) {
      report_.sparse_sample = true;
      done_ = true;
      return;
    }
    const Count ell = compute_ell(stats_.n, stats_.m, config_.epsilon, config_.t_hat, report_.r, report_.d_R,
                                  config_.c_ell * config_.scale);
    report_.ell = std::min(ell, stats_.m);
    report_.ell_capped = ell > stats_.m;
    draws_ = weighted_pick(sample_degree_, report_.ell, report_.seed);
    std::vector<NeighborRequest> requests;
    requests.reserve(draws_.size());
    for (std::size_t idx : draws_) {
      const Edge& e = sample_[idx];
      requests.push_back({e, anchor_of(e, degrees_.at(e.u), degrees_.at(e.v)), 1});
    }
    neighbors_ = NeighborSampler(requests, report_.seed, Role::kNeighborSample);
    note_stored(base_stored() + neighbors_.slot_count());
  }

  void finish_neighbors() {
    const auto sampled = neighbors_.results();
    neighbors_ = {};
    third_.assign(draws_.size(), kNone);
    ClosureQuery query;
    std::set<VertexId> unknown;
    for (std::size_t i = 0; i < draws_.size(); ++i) {
      if (sampled[i].empty()) continue;
      const Edge& e = sample_[draws_[i]];
      const VertexId anchor = anchor_of(e, degrees_.at(e.u), degrees_.at(e.v));
      const VertexId w = sampled[i][0];
      if (w == e.other(anchor)) continue;
      third_[i] = w;
      query.pairs.emplace_back(e.other(anchor), w);
      if (degrees_.count(w) == 0) unknown.insert(w);
    }
    query.vertices.assign(unknown.begin(), unknown.end());
    closure_ = ClosureChecker(query);
    note_stored(base_stored() + draws_.size() + closure_.stored());
  }

  void finish_closure() {
    std::map<Triangle, std::size_t> index;
    hit_triangle_.assign(draws_.size(), kNone);
    for (std::size_t i = 0; i < draws_.size(); ++i) {
      if (third_[i] == kNone) continue;
      const Edge& e = sample_[draws_[i]];
      const VertexId w = third_[i];
      const VertexId anchor = anchor_of(e, degrees_.at(e.u), degrees_.at(e.v));
      if (!closure_.present(Edge(e.other(anchor), w))) continue;
      ++report_.assignment_calls;
      const Triangle t(e.u, e.v, w);
      auto [it, fresh] = index.try_emplace(t, records_.size());
      if (fresh) {
        TriangleRecord rec;
        rec.tri = t;
        rec.origin = i;
        for (std::size_t k = 0; k < 3; ++k) {
          const VertexId v = t.v[k];
          auto known = degrees_.find(v);
          rec.degree[k] = known != degrees_.end() ? known->second : closure_.degree(v);
        }
        records_.push_back(rec);
      }
      hit_triangle_[i] = it->second;
    }
    report_.triangles_discovered = records_.size();
    closure_ = {};
    note_stored(base_stored() + 3 * records_.size());

    if (config_.abort_multiplier > 0) {
      // Expected calls are ell * t_R / d_R with E[t_R] = 3 r T / m.
      const double expected = static_cast<double>(report_.ell) * 3.0 * static_cast<double>(report_.r) *
                              config_.t_hat / (static_cast<double>(stats_.m) * static_cast<double>(report_.d_R));
      if (static_cast<double>(report_.assignment_calls) > config_.abort_multiplier * std::max(1.0, expected)) {
        report_.aborted = true;
        done_ = true;
        return;
      }
    }

    AssignmentParams params;
    params.m = stats_.m;
    params.epsilon = config_.epsilon;
    params.t_hat = config_.t_hat;
    params.kappa_hat = config_.kappa_hat;
    params.s = report_.s;
    assigner_.emplace(records_, params, table_, report_.seed, stats_.m);
    report_.wedge_capped = assigner_->whole_neighborhoods();
  }

  void finish_assignment() {
    assigner_->finish_pass6(table_);
    note_stored(base_stored() + 3 * records_.size() + table_.size() + assigner_->stored());
    assigner_.reset();
    for (std::size_t i = 0; i < draws_.size(); ++i) {
      if (hit_triangle_[i] == kNone) continue;
      const Edge& e = sample_[draws_[i]];
      if (is_assigned(records_[hit_triangle_[i]].tri, e, table_)) ++report_.assigned_hits;
    }
    report_.memo_size = table_.size();
    const double y = static_cast<double>(report_.assigned_hits) / static_cast<double>(report_.ell);
    report_.x = static_cast<double>(stats_.m) / static_cast<double>(report_.r) * static_cast<double>(report_.d_R) * y;
    done_ = true;
  }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  StreamStats stats_;
  EstimatorConfig config_;
  RepetitionOptions options_;
  RepetitionReport report_;
  bool done_ = false;

  UniformReservoirBank<Edge> reservoir_;
  std::vector<Edge> stored_edges_;
  std::vector<Edge> sample_;
  std::unordered_map<VertexId, Count> degrees_;
  std::vector<Count> sample_degree_;
  std::vector<std::size_t> draws_;
  NeighborSampler neighbors_;
  std::vector<VertexId> third_;
  ClosureChecker closure_;
  std::vector<TriangleRecord> records_;
  std::vector<std::size_t> hit_triangle_;
  std::optional<AssignmentPasses> assigner_;
  AssignmentTable table_;
};

struct RunReport {
  double estimate = 0;
  Count passes = 0;        // estimator passes, excluding the stats pass
  Count stats_passes = 0;  // 1 when n and m were learned from the stream
  Count stored_edges_peak = 0;
  Count r = 0;
  Count ell = 0;           // largest ell over repetitions
  Count s = 0;
  Count assignment_calls = 0;
  Count memo_size = 0;     // largest table over repetitions
  std::uint64_t seed = 0;
  EstimatorConfig config;
  StreamStats stats;
  std::vector<RepetitionReport> repetitions;
  std::vector<AssignmentTable> tables;  // kept when requested

  std::vector<std::string> flags() const {
    std::vector<std::string> out;
    auto any = [&](auto member) {
      return std::any_of(repetitions.begin(), repetitions.end(), [&](const RepetitionReport& r) { return r.*member; });
    };
    if (config.sub_theoretical()) out.emplace_back("sub_theoretical");
    if (any(&RepetitionReport::exact_fallback)) out.emplace_back("exact_fallback");
    if (any(&RepetitionReport::sparse_sample)) out.emplace_back("sparse_sample");
    if (any(&RepetitionReport::ell_capped)) out.emplace_back("ell_capped");
    if (any(&RepetitionReport::wedge_capped)) out.emplace_back("wedge_capped");
    if (any(&RepetitionReport::aborted)) out.emplace_back("aborted");
    return out;
  }
};

inline std::uint64_t repetition_seed(std::uint64_t seed, std::size_t index) {
  return derive_key(seed, Role::kRepetition, index);
}

// Runs config.repetitions independent repetitions and reports the median X.
// Sequential repetitions take six passes each; with share_passes they all
// ride the same six passes. When `known` is absent, n and m are learned
// with one extra pass that is reported separately.
inline RunReport estimate(EdgeStream& stream, const EstimatorConfig& config,
                          std::optional<StreamStats> known = std::nullopt, bool keep_tables = false) {
  config.validate();
  RunReport report;
  report.config = config;
  report.seed = config.seed;
  if (known) {
    report.stats = *known;
  } else {
    report.stats = stats(stream);
    report.stats_passes = 1;
  }
  const Count passes_before = stream.passes();

  auto drive = [&](std::vector<Repetition>& reps) {
    for (int pass = 1; pass <= kMainPasses; ++pass) {
      run_pass(stream, [&](const Edge& e) {
        for (auto& rep : reps) rep.on_edge(pass, e);
      });
      for (auto& rep : reps) rep.finish_pass(pass);
    }
  };
  auto collect = [&](std::vector<Repetition>& reps) {
    for (auto& rep : reps) {
      report.repetitions.push_back(rep.report());
      if (keep_tables) report.tables.push_back(rep.table());
    }
  };

  if (config.share_passes) {
    std::vector<Repetition> reps;
    reps.reserve(config.repetitions);
    for (std::size_t i = 0; i < config.repetitions; ++i) {
      reps.emplace_back(report.stats, config, repetition_seed(config.seed, i));
    }
    drive(reps);
    collect(reps);
    for (const auto& rep : report.repetitions) report.stored_edges_peak += rep.stored_peak;
  } else {
    for (std::size_t i = 0; i < config.repetitions; ++i) {
      std::vector<Repetition> reps;
      reps.emplace_back(report.stats, config, repetition_seed(config.seed, i));
      drive(reps);
      collect(reps);
    }
    for (const auto& rep : report.repetitions) {
      report.stored_edges_peak = std::max(report.stored_edges_peak, rep.stored_peak);
    }
  }
  report.passes = stream.passes() - passes_before;

  std::vector<double> xs;
  for (const auto& rep : report.repetitions) {
    report.r = std::max(report.r, rep.r);
    report.ell = std::max(report.ell, rep.ell);
    report.s = std::max(report.s, rep.s);
    report.assignment_calls += rep.assignment_calls;
    report.memo_size = std::max(report.memo_size, rep.memo_size);
    if (!rep.aborted) xs.push_back(rep.x);
  }
  report.estimate = xs.empty() ? 0.0 : median(std::move(xs));
  return report;
}

// One repetition on its own six passes.
inline RepetitionReport estimate_once(EdgeStream& stream, const EstimatorConfig& config, StreamStats known,
                                      RepetitionOptions options = {}) {
  config.validate();
  Repetition rep(known, config, config.seed, std::move(options));
  for (int pass = 1; pass <= kMainPasses; ++pass) {
    run_pass(stream, [&](const Edge& e) { rep.on_edge(pass, e); });
    rep.finish_pass(pass);
  }
  return rep.report();
}

}  // namespace triad
