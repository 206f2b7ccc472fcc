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

// triad: generate graphs, count triangles exactly, estimate, benchmark.
//
// Exit codes: 0 success, 2 configuration or usage error, 3 malformed or
// invalid input, 1 anything else.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "triad/triad.hpp"

namespace {

using triad::Count;
using triad::Json;

struct Globals {
  std::uint64_t seed = 0;
  std::string format = "json";
  bool quiet = false;
};

struct GenArgs {
  std::string family;
  Count n = 0;
  Count k = 0;
  Count p = 0;
  Count q = 0;
  Count N = 0;
  std::string kind = "yes";
  Count shared = 1;
  Count attach = 0;
  double prob = 0;
  std::string out;
};

struct EstimateArgs {
  std::string path;
  std::string mode = "main";
  double epsilon = 0.2;
  std::optional<double> t_hat;
  std::optional<double> kappa_hat;
  std::size_t repetitions = 1;
  double scale = 1.0;
  bool share_passes = false;
  double abort_multiplier = 10.0;
  std::optional<std::uint64_t> order_seed;
  std::string dump_assignments;
  bool restart_halving = false;
};

struct BenchArgs {
  std::string manifest;
  std::string out;
  bool timing = false;
};

void emit(const Globals& g, const Json& json, const std::string& csv) {
  if (g.format == "csv") {
    std::cout << csv;
  } else {
    std::cout << json.dump(2) << "\n";
  }
}

void note(const Globals& g, const std::string& msg) {
  if (!g.quiet) std::cerr << msg << "\n";
}

std::string scalar_csv(const Json& obj) {
  std::vector<std::string> keys;
  std::vector<std::string> values;
  for (const auto& [key, value] : obj.items()) {
    keys.push_back(key);
    values.push_back(value.is_number_float() ? triad::format_number(value.get<double>()) : value.dump());
  }
  return triad::csv_join(keys) + "\n" + triad::csv_join(values) + "\n";
}

int cmd_gen(const Globals& g, const GenArgs& a) {
  Json params;
  const std::string& f = a.family;
  if (f == "wheel") {
    params = {{"n", a.n}};
  } else if (f == "book" || f == "complete") {
    params = {{"k", a.k}};
  } else if (f == "lb") {
    params = {{"p", a.p}, {"q", a.q}, {"N", a.N}, {"kind", a.kind}, {"shared", a.shared}, {"seed", g.seed}};
  } else if (f == "pa") {
    params = {{"n", a.n}, {"attach", a.attach}, {"seed", g.seed}};
  } else if (f == "er") {
    params = {{"n", a.n}, {"prob", a.prob}, {"seed", g.seed}};
  } else {
    throw triad::ConfigError("unknown family '" + f + "' (wheel, book, complete, lb, pa, er)");
  }
  const triad::GeneratedGraph gen = triad::build_family(f, params);
  const std::string out = a.out.empty() ? f + ".el" : a.out;
  {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw triad::InputError("cannot write " + out);
    triad::write_edge_list(file, gen.graph.edges());
  }
  Json sidecar = triad::truth_json(gen.truth);
  sidecar["family"] = f;
  sidecar["params"] = params;
  {
    std::ofstream file(out + ".truth.json", std::ios::binary);
    if (!file) throw triad::InputError("cannot write " + out + ".truth.json");
    file << sidecar.dump(2) << "\n";
  }
  note(g, "wrote " + out + " and " + out + ".truth.json");
  emit(g, triad::truth_json(gen.truth), scalar_csv(triad::truth_json(gen.truth)));
  return 0;
}

int cmd_exact(const Globals& g, const std::string& path) {
  const triad::Graph graph = triad::load_graph(path);
  Json out{{"n", graph.n()},
           {"m", graph.m()},
           {"T", triad::triangles_exact_cn(graph)},
           {"kappa", triad::degeneracy(graph)},
           {"d_E", triad::sum_edge_degrees(graph)}};
  emit(g, out, scalar_csv(out));
  return 0;
}

Json estimate_main(const Globals& g, const EstimateArgs& a, triad::EdgeStream& stream) {
  if (!a.kappa_hat) throw triad::ConfigError("--kappa-hat is required in main mode");
  triad::EstimatorConfig cfg;
  cfg.epsilon = a.epsilon;
  cfg.t_hat = *a.t_hat;
  cfg.kappa_hat = *a.kappa_hat;
  cfg.repetitions = a.repetitions;
  cfg.scale = a.scale;
  cfg.share_passes = a.share_passes;
  cfg.abort_multiplier = a.abort_multiplier;
  cfg.seed = g.seed;
  const bool dump = !a.dump_assignments.empty();

  triad::RunReport report = triad::estimate(stream, cfg, std::nullopt, dump);
  Json json = triad::run_report_json(report);
  if (a.restart_halving) {
    // Experimental: halve t_hat until the estimate reaches it.
    Count restarts = 0;
    Count passes = report.passes;
    Count stats_passes = report.stats_passes;
    while (report.estimate < cfg.t_hat && cfg.t_hat > 1) {
      cfg.t_hat = std::max(1.0, cfg.t_hat / 2);
      report = triad::estimate(stream, cfg, report.stats, dump);
      passes += report.passes;
      ++restarts;
    }
    json = triad::run_report_json(report);
    json["passes"] = passes;
    json["config"]["stats_passes"] = stats_passes;
    json["config"]["passes_with_stats"] = passes + stats_passes;
    json["config"]["restarts"] = restarts;
    json["config"]["flags"].push_back("experimental_restart");
  }
  if (dump) {
    Json tables = Json::array();
    for (std::size_t i = 0; i < report.tables.size(); ++i) {
      tables.push_back({{"repetition", i},
                        {"seed", report.repetitions[i].seed},
                        {"assignments", triad::assignment_table_json(report.tables[i], &stream.ids())}});
    }
    std::ofstream file(a.dump_assignments, std::ios::binary);
    if (!file) throw triad::InputError("cannot write " + a.dump_assignments);
    file << tables.dump(2) << "\n";
    note(g, "wrote " + a.dump_assignments);
  }
  return json;
}

Json estimate_ideal(const Globals& g, const EstimateArgs& a, triad::EdgeStream& stream) {
  // The degree oracle needs the graph in memory; loading it is not a pass.
  const triad::Graph graph = triad::load_graph(a.path);
  const triad::DegreeOracle oracle(graph);
  triad::IdealConfig cfg;
  cfg.epsilon = a.epsilon;
  cfg.t_hat = *a.t_hat;
  const triad::IdealRun run = triad::ideal_estimate(stream, oracle, cfg, g.seed);
  return triad::ideal_report_json(run, cfg, g.seed, 0);
}

int cmd_estimate(const Globals& g, const EstimateArgs& a) {
  if (a.mode != "main" && a.mode != "ideal") throw triad::ConfigError("--mode must be main or ideal");
  if (!a.t_hat) throw triad::ConfigError("--t-hat is required");
  triad::EdgeStream stream = triad::EdgeStream::open(a.path, a.order_seed);
  const Json json = a.mode == "main" ? estimate_main(g, a, stream) : estimate_ideal(g, a, stream);
  emit(g, json, triad::run_report_csv(json));
  return 0;
}

int cmd_bench(const Globals& g, const BenchArgs& a) {
  std::ifstream in(a.manifest, std::ios::binary);
  if (!in) throw triad::InputError("cannot open " + a.manifest);
  Json manifest;
  try {
    manifest = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw triad::InputError(std::string("manifest is not valid JSON: ") + e.what());
  }
  const std::vector<triad::BenchRow> rows = triad::run_bench(manifest, a.timing);
  std::string text;
  if (g.format == "json") {
    Json out = Json::array();
    for (const auto& row : rows) {
      out.push_back({{"family", row.family},
                     {"n", row.n},
                     {"m", row.m},
                     {"T_exact", row.T_exact},
                     {"kappa", row.kappa},
                     {"epsilon", row.epsilon},
                     {"t_hat", row.t_hat},
                     {"kappa_hat", row.kappa_hat},
                     {"estimate", row.estimate},
                     {"relative_error", row.relative_error ? Json(*row.relative_error) : Json(nullptr)},
                     {"passes", row.passes},
                     {"stored_edges_peak", row.stored_edges_peak},
                     {"r", row.r},
                     {"ell", row.ell},
                     {"s", row.s},
                     {"seed", row.seed},
                     {"wall_time_ms", row.wall_time_ms ? Json(*row.wall_time_ms) : Json(nullptr)}});
    }
    text = out.dump(2) + "\n";
  } else {
    text = triad::bench_csv(rows);
  }
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw triad::InputError("cannot write " + a.out);
    file << text;
    note(g, "wrote " + std::to_string(rows.size()) + " rows to " + a.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-pass streaming triangle counting"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->envname("TRIAD_SEED");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("TRIAD_FORMAT");
  app.add_flag("--quiet", g.quiet, "Suppress progress messages on stderr")->envname("TRIAD_QUIET");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph and its ground-truth sidecar");
  gen_cmd->add_option("family", gen.family, "wheel, book, complete, lb, pa or er")->required();
  gen_cmd->add_option("--n", gen.n, "Vertices (wheel, pa, er)");
  gen_cmd->add_option("--k", gen.k, "Pages (book) or clique size (complete)");
  gen_cmd->add_option("--p", gen.p, "Core side size (lb)");
  gen_cmd->add_option("--q", gen.q, "Block size (lb)");
  gen_cmd->add_option("--N", gen.N, "String length, divisible by 3 (lb)");
  gen_cmd->add_option("--kind", gen.kind, "yes or no (lb)")->check(CLI::IsMember({"yes", "no"}));
  gen_cmd->add_option("--shared", gen.shared, "Shared indices in a NO instance (lb)");
  gen_cmd->add_option("--attach", gen.attach, "Edges per new vertex (pa)");
  gen_cmd->add_option("--prob", gen.prob, "Edge probability (er)");
  gen_cmd->add_option("--out", gen.out, "Output edge list, default <family>.el");

  std::string exact_path;
  auto* exact_cmd = app.add_subcommand("exact", "Exact n, m, T, kappa and d_E of an edge list");
  exact_cmd->add_option("path", exact_path, "Edge-list file")->required();

  EstimateArgs est;
  auto* est_cmd = app.add_subcommand("estimate", "Estimate the triangle count of an edge list");
  est_cmd->add_option("path", est.path, "Edge-list file")->required();
  est_cmd->add_option("--mode", est.mode, "main or ideal")
      ->check(CLI::IsMember({"main", "ideal"}))
      ->envname("TRIAD_MODE");
  est_cmd->add_option("--epsilon", est.epsilon, "Accuracy parameter")->envname("TRIAD_EPSILON");
  est_cmd->add_option("--t-hat", est.t_hat, "Lower bound on the triangle count")->envname("TRIAD_T_HAT");
  est_cmd->add_option("--kappa-hat", est.kappa_hat, "Upper bound on the degeneracy")->envname("TRIAD_KAPPA_HAT");
  est_cmd->add_option("--repetitions", est.repetitions, "Odd number of repetitions")->envname("TRIAD_REPETITIONS");
  est_cmd->add_option("--scale", est.scale, "Multiplier in (0,1] on the sample-size constants")
      ->envname("TRIAD_SCALE");
  est_cmd->add_flag("--share-passes", est.share_passes, "Run all repetitions on one set of passes")
      ->envname("TRIAD_SHARE_PASSES");
  est_cmd->add_option("--abort-multiplier", est.abort_multiplier, "Abort budget multiplier, 0 disables")
      ->envname("TRIAD_ABORT_MULTIPLIER");
  est_cmd->add_option("--order-seed", est.order_seed, "Shuffle the stream order with this seed")
      ->envname("TRIAD_ORDER_SEED");
  est_cmd->add_option("--debug-dump-assignments", est.dump_assignments, "Write assignment tables to this file");
  est_cmd->add_flag("--restart-halving", est.restart_halving,
                    "Experimental: halve t_hat until the estimate reaches it");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark manifest");
  bench_cmd->add_option("manifest", bench.manifest, "Manifest JSON file")->required();
  bench_cmd->add_option("--out", bench.out, "Write rows here instead of stdout");
  bench_cmd->add_flag("--timing", bench.timing, "Fill the wall_time_ms column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen_cmd) return cmd_gen(g, gen);
    if (*exact_cmd) return cmd_exact(g, exact_path);
    if (*est_cmd) return cmd_estimate(g, est);
    if (*bench_cmd) return cmd_bench(g, bench);
  } catch (const triad::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const triad::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const triad::LineError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const triad::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
