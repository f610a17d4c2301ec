// Copyright 2026 The Authors.
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

// Command-line front end. Machine-readable JSON goes to stdout (or
// --json-out); human summaries go to stderr. Exit codes: 0 success, 1 usage
// error, 2 instance/input error, 3 internal invariant breach.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "laminar_match/bench.hpp"
#include "laminar_match/generator.hpp"
#include "laminar_match/json_io.hpp"
#include "laminar_match/oracle.hpp"
#include "laminar_match/solver.hpp"

namespace lm = laminar_match;
using nlohmann::json;

namespace {

void emit(const json& doc, const std::optional<std::string>& json_out) {
  const std::string text = doc.dump(2) + "\n";
  if (json_out) {
    lm::write_text_file(*json_out, text);
  } else {
    std::cout << text;
  }
}

json result_document(const lm::Instance& inst, const lm::SolveResult& r) {
  return {{"matching", lm::matching_json(inst, r.matching)},
          {"cardinality", r.matching.size()},
          {"stable", r.stable},
          {"algorithm", r.algorithm},
          {"iterations", r.stats.iterations},
          {"elapsed_ms", r.stats.elapsed_ms}};
}

lm::SolveResult run_algorithm(const lm::Instance& inst,
                              const std::string& algo, std::uint64_t seed,
                              bool random_tiebreak) {
  if (algo == "three-halves") return lm::solve_three_halves(inst);
  if (algo == "tiebreak") {
    return lm::solve_tiebreak(inst,
                              random_tiebreak
                                  ? lm::TieBreakRule::kSeededRandom
                                  : lm::TieBreakRule::kIndexOrder,
                              seed);
  }
  if (algo == "mechanism") return lm::worker_optimal_mechanism(inst);
  if (algo == "mechanism-tiebreak") {
    return lm::strategyproof_tiebreak_mechanism(inst);
  }
  throw lm::InstanceError("unknown algorithm: " + algo);
}

int cmd_solve(const std::string& path, const std::string& algo,
              std::uint64_t seed, bool random_tiebreak, bool dump_forests,
              const std::optional<std::string>& json_out) {
  const lm::Instance inst = lm::load_instance(path);
  if (dump_forests) {
    const lm::AuxInstance aux = lm::build_auxiliary(inst);
    for (lm::Side side : {lm::Side::kWorker, lm::Side::kFirm}) {
      std::cerr << (side == lm::Side::kWorker ? "# worker-side forest\n"
                                              : "# firm-side forest\n")
                << lm::build_side_matroid(aux.inner, side).forest().debug_dump();
    }
  }
  const lm::SolveResult result = run_algorithm(inst, algo, seed,
                                               random_tiebreak);
  emit(result_document(inst, result), json_out);
  std::cerr << result.algorithm << ": |M|=" << result.matching.size()
            << " stable=" << (result.stable ? "true" : "false")
            << " iterations=" << result.stats.iterations
            << " ground=" << result.stats.ground_contracts
            << " elapsed_ms=" << result.stats.elapsed_ms << "\n";
  return 0;
}

int cmd_check(const std::string& instance_path, const std::string& result_path,
              const std::optional<std::string>& json_out) {
  const lm::Instance inst = lm::load_instance(instance_path);
  const json result_doc = json::parse(lm::read_text_file(result_path),
                                      nullptr, /*allow_exceptions=*/false);
  if (result_doc.is_discarded() || !result_doc.contains("matching")) {
    throw lm::ParseError("result document must contain a \"matching\" array");
  }
  const lm::Matching m = lm::matching_from_json(inst, result_doc["matching"]);
  const bool feasible = lm::is_matching(inst, m);
  json doc = {{"cardinality", m.size()},
              {"feasible", feasible},
              {"stable", false},
              {"blocking", json::array()}};
  if (feasible) {
    const auto blocking = lm::blocking_contracts(inst, m);
    doc["stable"] = blocking.empty();
    doc["blocking"] = lm::matching_json(inst, blocking);
  }
  emit(doc, json_out);
  std::cerr << "stable: " << (doc["stable"].get<bool>() ? "true" : "false")
            << "\n";
  return 0;
}

int cmd_transform(const std::string& path,
                  const std::optional<std::string>& json_out,
                  std::optional<std::string> copy_map_out) {
  const lm::Instance inst = lm::load_instance(path);
  const lm::AuxInstance aux = lm::build_auxiliary(inst);

  json copy_map = json::object();
  for (lm::ContractId e = 0; e < inst.num_contracts(); ++e) {
    if (aux.copies[e][0] < 0) continue;
    json entry = json::object();
    for (lm::CopyKind k :
         {lm::CopyKind::kX, lm::CopyKind::kY, lm::CopyKind::kZ}) {
      const lm::ContractId c = aux.copies[e][static_cast<int>(k)];
      entry[std::string(1, lm::copy_kind_letter(k))] =
          aux.inner.contracts[c].name;
    }
    copy_map[inst.contracts[e].name] = entry;
  }

  const std::string instance_text = lm::serialize_instance(aux.inner);
  if (json_out) {
    lm::write_text_file(*json_out, instance_text);
    if (!copy_map_out) copy_map_out = *json_out + ".copymap.json";
  } else {
    std::cout << instance_text;
  }
  if (copy_map_out) {
    lm::write_text_file(*copy_map_out, copy_map.dump(2) + "\n");
    std::cerr << "copy map written to " << *copy_map_out << "\n";
  }
  std::cerr << "auxiliary instance: " << aux.inner.num_contracts()
            << " contracts\n";
  return 0;
}

int cmd_oracle(const std::string& path, bool emit_all,
               const std::optional<std::string>& json_out) {
  const lm::Instance inst = lm::load_instance(path);
  lm::require_valid(inst);
  const auto stable = lm::oracle::enumerate_stable(inst);
  int opt = 0;
  for (const auto& m : stable) opt = std::max(opt, static_cast<int>(m.size()));

  json verdicts = json::array();
  auto add_verdict = [&](const lm::SolveResult& r, int num, int den) {
    const bool ok =
        static_cast<long long>(den) * static_cast<long long>(r.matching.size()) >=
        static_cast<long long>(num) * opt;
    verdicts.push_back({{"algorithm", r.algorithm},
                        {"cardinality", r.matching.size()},
                        {"stable", r.stable},
                        {"ratio", std::to_string(num) + "/" +
                                      std::to_string(den)},
                        {"ok", ok}});
  };
  add_verdict(lm::solve_three_halves(inst), 2, 3);
  add_verdict(lm::solve_tiebreak(inst, lm::TieBreakRule::kIndexOrder), 1, 2);
  if (inst.mode == lm::Mode::kOneSidedOlc) {
    if (!inst.has_ties(lm::Side::kFirm)) {
      add_verdict(lm::worker_optimal_mechanism(inst), 2, 3);
    }
    add_verdict(lm::strategyproof_tiebreak_mechanism(inst), 1, 2);
  }

  json doc = {{"stable_count", stable.size()},
              {"opt", opt},
              {"verdicts", verdicts}};
  if (emit_all) {
    json all = json::array();
    for (const auto& m : stable) all.push_back(lm::matching_json(inst, m));
    doc["stable_matchings"] = all;
  }
  emit(doc, json_out);

  std::cerr << "stable matchings: " << stable.size() << ", opt: " << opt
            << "\n";
  for (const json& v : verdicts) {
    std::cerr << "  " << v["algorithm"].get<std::string>() << "  |M|="
              << v["cardinality"].get<std::size_t>() << "  ratio "
              << v["ratio"].get<std::string>() << "  "
              << (v["ok"].get<bool>() ? "ok" : "VIOLATED") << "\n";
  }
  return 0;
}

int cmd_gen(const lm::GenParams& params,
            const std::optional<std::string>& json_out) {
  const lm::Instance inst = lm::generate(params);
  const std::string text = lm::serialize_instance(inst);
  if (json_out) {
    lm::write_text_file(*json_out, text);
  } else {
    std::cout << text;
  }
  std::cerr << "generated " << inst.num_contracts() << " contracts over "
            << inst.workers.size() << " workers and " << inst.firms.size()
            << " firms\n";
  return 0;
}

int cmd_bench(const lm::BenchParams& params,
              const std::optional<std::string>& json_out) {
  const lm::BenchReport report = lm::run_bench(params);
  json rows = json::array();
  for (const lm::BenchRow& row : report.rows) {
    rows.push_back({{"size", row.size},
                    {"median_ms", row.median_ms},
                    {"max_ms", row.max_ms},
                    {"mean_iterations", row.mean_iterations},
                    {"ground_contracts", row.ground_contracts}});
  }
  const json doc = {{"rows", rows},
                    {"fitted_exponent", report.fitted_exponent},
                    {"depth_doubled_ratio", report.depth_doubled_ratio}};
  emit(doc, json_out);
  for (const lm::BenchRow& row : report.rows) {
    std::cerr << "size " << row.size << ": median " << row.median_ms
              << " ms, max " << row.max_ms << " ms, mean iterations "
              << row.mean_iterations << "\n";
  }
  std::cerr << "fitted exponent: " << report.fitted_exponent
            << ", doubled-depth ratio: " << report.depth_doubled_ratio << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable matching under ties and laminar quotas"};
  app.require_subcommand(1);

  std::string instance_path, result_path, algo = "three-halves";
  std::uint64_t seed = 0;
  bool random_tiebreak = false, emit_all = false, dump_forests = false;
  std::optional<std::string> json_out, copy_map_out;

  CLI::App* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--algo", algo)
      ->check(CLI::IsMember(
          {"three-halves", "tiebreak", "mechanism", "mechanism-tiebreak"}));
  solve->add_option("--seed", seed);
  solve->add_flag("--random-tiebreak", random_tiebreak,
                  "break ties with the seeded rule instead of index order");
  solve->add_flag("--debug-forest", dump_forests,
                  "dump the side forests of the auxiliary instance");
  solve->add_option("--json-out", json_out);

  CLI::App* check = app.add_subcommand("check", "check a result document");
  check->add_option("instance", instance_path)->required();
  check->add_option("result", result_path)->required();
  check->add_option("--json-out", json_out);

  CLI::App* transform =
      app.add_subcommand("transform", "emit the auxiliary instance");
  transform->add_option("instance", instance_path)->required();
  transform->add_option("--json-out", json_out);
  transform->add_option("--copy-map-out", copy_map_out);

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive ground truth (small inputs)");
  oracle_cmd->add_option("instance", instance_path)->required();
  oracle_cmd->add_flag("--emit-all", emit_all);
  oracle_cmd->add_option("--json-out", json_out);

  lm::GenParams gen_params;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--workers", gen_params.workers);
  gen->add_option("--firms", gen_params.firms);
  gen->add_option("--contracts", gen_params.contracts);
  gen->add_option("--tie-prob", gen_params.tie_probability);
  gen->add_option("--depth", gen_params.depth);
  gen->add_option("--quota-min", gen_params.quota_min);
  gen->add_option("--quota-max", gen_params.quota_max);
  std::string mode = "smti-lc";
  gen->add_option("--mode", mode)->check(CLI::IsMember({"smti-lc", "smti-olc"}));
  gen->add_option("--seed", seed);
  gen->add_option("--json-out", json_out);

  lm::BenchParams bench_params;
  std::vector<int> sizes{250, 500, 1000};
  CLI::App* bench = app.add_subcommand("bench", "time the solver");
  bench->add_option("--sizes", sizes)->delimiter(',');
  bench->add_option("--seeds-per-size", bench_params.seeds_per_size);
  bench->add_option("--depth", bench_params.depth);
  bench->add_option("--tie-prob", bench_params.tie_probability);
  bench->add_option("--seed", bench_params.seed);
  bench->add_option("--threads", bench_params.threads);
  bench->add_option("--json-out", json_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) {
      return cmd_solve(instance_path, algo, seed, random_tiebreak,
                       dump_forests, json_out);
    }
    if (check->parsed()) return cmd_check(instance_path, result_path, json_out);
    if (transform->parsed()) {
      return cmd_transform(instance_path, json_out, copy_map_out);
    }
    if (oracle_cmd->parsed()) {
      return cmd_oracle(instance_path, emit_all, json_out);
    }
    if (gen->parsed()) {
      gen_params.mode =
          mode == "smti-olc" ? lm::Mode::kOneSidedOlc : lm::Mode::kTwoSided;
      gen_params.seed = seed;
      return cmd_gen(gen_params, json_out);
    }
    if (bench->parsed()) {
      bench_params.sizes = sizes;
      return cmd_bench(bench_params, json_out);
    }
  } catch (const lm::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const lm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
