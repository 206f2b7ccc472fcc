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

// Graph families by name, and the benchmark manifest runner.
//
// Manifest:
//   {"runs": [{"family": "book", "params": {"k": 998},
//              "mode": "main", "epsilon": 0.2, "scale": 0.005,
//              "repetitions": 11, "trials": 30, "seed": 1,
//              "t_hat": <default exact T>, "kappa_hat": <default exact kappa>,
//              "share_passes": false, "order_seed": <optional>}]}
// Trial j of a run uses seed + j. Rows come out in manifest order.

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "triad/edge_list.hpp"
#include "triad/edge_stream.hpp"
#include "triad/generators.hpp"
#include "triad/ideal_estimator.hpp"
#include "triad/main_estimator.hpp"
#include "triad/report.hpp"

namespace triad {

namespace detail {

template <typename T>
T param(const Json& params, const char* key) {
  if (!params.contains(key)) throw ConfigError(std::string("missing family parameter '") + key + "'");
  try {
    return params.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("family parameter '") + key + "' has the wrong type");
  }
}

template <typename T>
T param_or(const Json& params, const char* key, T fallback) {
  return params.contains(key) ? param<T>(params, key) : fallback;
}

}  // namespace detail

// Families: wheel{n}, book{k}, complete{k}, lb{p,q,N,kind,shared,seed},
// pa{n,attach,seed}, er{n,prob,seed}, file{path}. Ground truth is the
// closed form where one exists and the exact oracles otherwise.
inline GeneratedGraph build_family(const std::string& family, const Json& params) {
  using detail::param;
  using detail::param_or;
  if (family == "wheel") return gen_wheel(param<Count>(params, "n"));
  if (family == "book") return gen_book(param<Count>(params, "k"));
  if (family == "complete") {
    Graph g = gen_complete(param<Count>(params, "k"));
    GroundTruth t = measure(g);
    return {std::move(g), t};
  }
  if (family == "lb") {
    const std::string kind = param_or<std::string>(params, "kind", "yes");
    if (kind != "yes" && kind != "no") throw ConfigError("lb kind must be 'yes' or 'no'");
    auto spec = make_lb_spec(param<Count>(params, "p"), param<Count>(params, "q"), param<Count>(params, "N"),
                             kind == "yes" ? DisjKind::kYes : DisjKind::kNo, param_or<std::uint64_t>(params, "seed", 0),
                             param_or<Count>(params, "shared", 1));
    return gen_lb_instance(spec);
  }
  if (family == "pa") {
    Graph g = gen_preferential_attachment(param<Count>(params, "n"), param<Count>(params, "attach"),
                                          param_or<std::uint64_t>(params, "seed", 0));
    GroundTruth t = measure(g);
    return {std::move(g), t};
  }
  if (family == "er") {
    Graph g = gen_erdos_renyi(param<Count>(params, "n"), param<double>(params, "prob"),
                              param_or<std::uint64_t>(params, "seed", 0));
    GroundTruth t = measure(g);
    return {std::move(g), t};
  }
  if (family == "file") {
    Graph g = load_graph(param<std::string>(params, "path"));
    GroundTruth t = measure(g);
    return {std::move(g), t};
  }
  throw ConfigError("unknown graph family '" + family + "'");
}

struct BenchRow {
  std::string family;
  Count n = 0;
  Count m = 0;
  Count T_exact = 0;
  Count kappa = 0;
  double epsilon = 0;
  double t_hat = 0;
  double kappa_hat = 0;
  double estimate = 0;
  std::optional<double> relative_error;  // absent when T_exact = 0
  Count passes = 0;
  Count stored_edges_peak = 0;
  Count r = 0;
  Count ell = 0;
  Count s = 0;
  std::uint64_t seed = 0;
  std::optional<double> wall_time_ms;  // only when timing is requested
};

inline const std::vector<std::string>& bench_csv_header() {
  static const std::vector<std::string> header{
      "family", "n",        "m",         "T_exact",        "kappa",      "epsilon",          "t_hat",
      "kappa_hat", "estimate", "relative_error", "passes", "stored_edges_peak", "r",  "ell",
      "s",      "seed",     "wall_time_ms"};
  return header;
}

inline std::string bench_csv_row(const BenchRow& row) {
  return csv_join({row.family, std::to_string(row.n), std::to_string(row.m), std::to_string(row.T_exact),
                   std::to_string(row.kappa), format_number(row.epsilon), format_number(row.t_hat),
                   format_number(row.kappa_hat), format_number(row.estimate),
                   row.relative_error ? format_number(*row.relative_error) : std::string(),
                   std::to_string(row.passes), std::to_string(row.stored_edges_peak), std::to_string(row.r),
                   std::to_string(row.ell), std::to_string(row.s), std::to_string(row.seed),
                   row.wall_time_ms ? format_number(*row.wall_time_ms) : std::string()});
}

inline std::vector<BenchRow> run_bench(const Json& manifest, bool timing = false) {
  using detail::param;
  using detail::param_or;
  if (!manifest.is_object()) throw ConfigError("manifest must be a JSON object");
  std::vector<BenchRow> rows;
  if (!manifest.contains("runs")) return rows;
  if (!manifest.at("runs").is_array()) throw ConfigError("manifest 'runs' must be an array");
  for (const Json& run : manifest.at("runs")) {
    if (!run.is_object()) throw ConfigError("manifest run must be an object");
    const std::string family = param<std::string>(run, "family");
    const Json params = run.contains("params") ? run.at("params") : Json::object();
    const std::string mode = param_or<std::string>(run, "mode", "main");
    if (mode != "main" && mode != "ideal") throw ConfigError("mode must be 'main' or 'ideal'");
    const GeneratedGraph gen = build_family(family, params);
    const GroundTruth truth = measure(gen.graph);
    const Count trials = param_or<Count>(run, "trials", 1);
    const std::uint64_t base_seed = param_or<std::uint64_t>(run, "seed", 0);
    const std::optional<std::uint64_t> order_seed =
        run.contains("order_seed") ? std::optional(param<std::uint64_t>(run, "order_seed")) : std::nullopt;

    EstimatorConfig cfg;
    cfg.epsilon = param_or<double>(run, "epsilon", 0.2);
    cfg.t_hat = param_or<double>(run, "t_hat", static_cast<double>(std::max<Count>(truth.T, 1)));
    cfg.kappa_hat = param_or<double>(run, "kappa_hat", static_cast<double>(std::max<Count>(truth.kappa, 1)));
    cfg.scale = param_or<double>(run, "scale", 1.0);
    cfg.repetitions = param_or<std::size_t>(run, "repetitions", 1);
    cfg.share_passes = param_or<bool>(run, "share_passes", false);
    cfg.abort_multiplier = param_or<double>(run, "abort_multiplier", 10.0);

    for (Count trial = 0; trial < trials; ++trial) {
      const std::uint64_t seed = base_seed + trial;
      EdgeStream stream = EdgeStream::from_graph(gen.graph, order_seed);
      const StreamStats known{truth.n, truth.m};
      BenchRow row;
      row.family = family;
      row.n = truth.n;
      row.m = truth.m;
      row.T_exact = truth.T;
      row.kappa = truth.kappa;
      row.epsilon = cfg.epsilon;
      row.t_hat = cfg.t_hat;
      row.seed = seed;
      const auto start = std::chrono::steady_clock::now();
      if (mode == "main") {
        cfg.seed = seed;
        row.kappa_hat = cfg.kappa_hat;
        const RunReport report = estimate(stream, cfg, known);
        row.estimate = report.estimate;
        row.passes = report.passes;
        row.stored_edges_peak = report.stored_edges_peak;
        row.r = report.r;
        row.ell = report.ell;
        row.s = report.s;
      } else {
        IdealConfig icfg;
        icfg.epsilon = cfg.epsilon;
        icfg.t_hat = cfg.t_hat;
        const DegreeOracle oracle(gen.graph);
        const IdealRun run_result = ideal_estimate(stream, oracle, icfg, seed);
        row.estimate = run_result.estimate;
        row.passes = run_result.passes;
        row.stored_edges_peak = run_result.groups * run_result.group_size;
        row.r = run_result.groups * run_result.group_size;
      }
      if (timing) {
        row.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      }
      if (truth.T > 0) {
        row.relative_error = std::abs(row.estimate - static_cast<double>(truth.T)) / static_cast<double>(truth.T);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = csv_join(bench_csv_header()) + "\n";
  for (const auto& row : rows) out += bench_csv_row(row) + "\n";
  return out;
}

}  // namespace triad
