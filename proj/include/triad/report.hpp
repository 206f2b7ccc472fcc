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

// JSON and CSV renderings of run reports. Key names and column order are
// a stability contract for downstream scripts.

#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"
#include "triad/assignment.hpp"
#include "triad/edge_list.hpp"
#include "triad/generators.hpp"
#include "triad/ideal_estimator.hpp"
#include "triad/main_estimator.hpp"

namespace triad {

using Json = nlohmann::ordered_json;

// Shortest representation that round-trips.
inline std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

inline Json truth_json(const GroundTruth& t) {
  return Json{{"n", t.n}, {"m", t.m}, {"T", t.T}, {"kappa", t.kappa}};
}

inline Json run_report_json(const RunReport& r) {
  const auto& c = r.config;
  Json config{{"mode", "main"},
              {"epsilon", c.epsilon},
              {"t_hat", c.t_hat},
              {"kappa_hat", c.kappa_hat},
              {"c_r", c.c_r},
              {"c_ell", c.c_ell},
              {"c_s", c.c_s},
              {"scale", c.scale},
              {"repetitions", c.repetitions},
              {"share_passes", c.share_passes},
              {"abort_multiplier", c.abort_multiplier},
              {"n", r.stats.n},
              {"m", r.stats.m},
              {"stats_passes", r.stats_passes},
              {"passes_with_stats", r.passes + r.stats_passes},
              {"flags", r.flags()}};
  return Json{{"estimate", r.estimate},
              {"passes", r.passes},
              {"stored_edges_peak", r.stored_edges_peak},
              {"r", r.r},
              {"ell", r.ell},
              {"s", r.s},
              {"assignment_calls", r.assignment_calls},
              {"memo_size", r.memo_size},
              {"seed", r.seed},
              {"config", config}};
}

// Ideal mode reuses the same keys: r is the instance count, assignment
// calls are closed wedges, and there is no ell, s or memo table.
inline Json ideal_report_json(const IdealRun& run, const IdealConfig& cfg, std::uint64_t seed, Count stats_passes) {
  Json config{{"mode", "ideal"},
              {"epsilon", cfg.epsilon},
              {"t_hat", cfg.t_hat},
              {"c", cfg.c},
              {"groups", run.groups},
              {"group_size", run.group_size},
              {"d_E", run.d_E},
              {"oracle_queries", run.oracle_queries},
              {"stats_passes", stats_passes},
              {"passes_with_stats", run.passes + stats_passes},
              {"flags", Json::array()}};
  return Json{{"estimate", run.estimate},
              {"passes", run.passes},
              {"stored_edges_peak", run.groups * run.group_size},
              {"r", run.groups * run.group_size},
              {"ell", 0},
              {"s", 0},
              {"assignment_calls", run.triangles_found},
              {"memo_size", 0},
              {"seed", seed},
              {"config", config}};
}

// Vertex ids are translated back to file ids when `ids` is given.
inline Json assignment_table_json(const AssignmentTable& table, const IdMap* ids = nullptr) {
  auto id = [&](VertexId v) -> std::uint64_t { return ids && ids->size() ? ids->to_original(v) : v; };
  Json out = Json::array();
  for (const auto& [tri, value] : table.entries()) {
    Json entry{{"triangle", {id(tri.v[0]), id(tri.v[1]), id(tri.v[2])}}};
    entry["edge"] = value ? Json{id(value->u), id(value->v)} : Json(nullptr);
    out.push_back(std::move(entry));
  }
  return out;
}

inline const std::vector<std::string>& run_report_csv_header() {
  static const std::vector<std::string> header{"estimate", "passes",           "stored_edges_peak", "r",    "ell",
                                               "s",        "assignment_calls", "memo_size",         "seed"};
  return header;
}

inline std::string csv_join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line.push_back(',');
    line += cells[i];
  }
  return line;
}

// CSV rendering of the scalar report fields (header line + one row).
inline std::string run_report_csv(const Json& report) {
  std::vector<std::string> row;
  for (const auto& key : run_report_csv_header()) {
    const auto& v = report.at(key);
    row.push_back(v.is_number_float() ? format_number(v.get<double>()) : v.dump());
  }
  return csv_join(run_report_csv_header()) + "\n" + csv_join(row) + "\n";
}

}  // namespace triad
