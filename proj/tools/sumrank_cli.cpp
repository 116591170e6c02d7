/*
 * Copyright 2026 The sumrank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// sumrank: key generation, distinguishing, recovery and Monte-Carlo
// campaigns for linearized Reed–Solomon codes in the sum-rank metric.
//
// Exit codes: 0 structured / success, 2 malformed input or configuration,
// 3 unstructured (or recovery failed), 4 inconclusive.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sumrank/distinguishers.hpp"
#include "sumrank/error.hpp"
#include "sumrank/experiment.hpp"
#include "sumrank/io.hpp"
#include "sumrank/isometry.hpp"
#include "sumrank/recovery.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sumrank;

namespace {

constexpr int kExitStructured = 0;
constexpr int kExitMalformed = 2;
constexpr int kExitUnstructured = 3;
constexpr int kExitInconclusive = 4;

struct Options {
  std::string field = "3,1,2";
  unsigned theta_l = 1;
  std::string gamma;
  std::string comp = "2,2";
  std::size_t k = 2;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::string method = "overbeck";
  std::optional<std::size_t> j;
  std::uint64_t budget = 10000;
  bool sweep_derivations = false;
  bool sweep_multipliers = false;
  std::string out;
  std::string generator;
  std::string params;
  std::string a_file;
  std::string v_file;
  std::string multipliers = "ones";
  bool semilinear = false;
  std::string mix = "mixed";
  unsigned threads = 0;
  bool record_time = false;
};

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(value));
    } catch (const std::exception&) {
      throw Error(Errc::MalformedInput, std::string("bad ") + what + " list: " + text);
    }
  }
  return out;
}

ExperimentConfig to_config(const Options& o) {
  ExperimentConfig cfg;
  const auto f = parse_list<unsigned>(o.field, "field");
  if (f.size() != 3) throw Error(Errc::MalformedInput, "--field expects p,s,m");
  cfg.p = f[0];
  cfg.s = f[1];
  cfg.m = f[2];
  cfg.theta_l = o.theta_l;
  cfg.gamma = parse_list<unsigned>(o.gamma, "gamma");
  cfg.comp = parse_list<std::size_t>(o.comp, "composition");
  cfg.k = o.k;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.method = parse_method(o.method);
  if (o.multipliers == "ones") {
    cfg.multipliers = Multipliers::Ones;
  } else if (o.multipliers == "random") {
    cfg.multipliers = Multipliers::Random;
  } else {
    throw Error(Errc::MalformedInput, "--multipliers expects ones or random");
  }
  cfg.semilinear = o.semilinear;
  cfg.j = o.j;
  cfg.budget = o.budget;
  cfg.sweep_multipliers = o.sweep_multipliers;
  cfg.mix = parse_mix(o.mix);
  cfg.record_time = o.record_time;
  cfg.threads = o.threads;
  return cfg;
}

// Accepts a bare array, an object with the key, or a keygen disguise file.
std::vector<Elem> read_vector_file(const Field& f, const std::string& path, const char* key) {
  const json doc = io::read_json_file(path);
  if (doc.is_array()) return io::vec_from_json(f, doc);
  if (doc.is_object() && doc.contains(key)) return io::vec_from_json(f, doc.at(key));
  if (doc.is_object() && doc.contains("public_params") && doc.at("public_params").contains(key)) {
    return io::vec_from_json(f, doc.at("public_params").at(key));
  }
  throw Error(Errc::MalformedInput, path + " has no \"" + key + "\" entry");
}

int exit_for(const Verdict& v) {
  if (v.structured) return kExitStructured;
  if (v.certainty == Certainty::Inconclusive) return kExitInconclusive;
  return kExitUnstructured;
}

fs::path out_dir(const Options& o) {
  fs::path dir = o.out.empty() ? fs::path(".") : fs::path(o.out);
  fs::create_directories(dir);
  return dir;
}

int cmd_keygen(const Options& o) {
  const ExperimentConfig cfg = to_config(o);
  auto field = Field::build(cfg.p, cfg.s, cfg.m);
  const OreCtx ore(field, cfg.theta_l, field->from_coeffs(cfg.gamma));
  Rng rng = derive_rng(cfg.seed, 0);
  const GlrsParams secret = random_glrs(ore, Composition(cfg.comp), cfg.k, rng, cfg.multipliers);
  const Disguise d = random_disguise(secret, rng, cfg.semilinear);
  const GlrsParams image = transport_params(d.iso, secret);

  const fs::path dir = out_dir(o);
  io::write_json_file(dir / "secret_params.json", io::params_to_json(secret));
  io::write_json_file(dir / "public_generator.json", io::public_code_to_json({image.ore, secret.comp, d.public_g}));
  io::write_json_file(dir / "disguise.json", json{{"isometry", io::isometry_to_json(*field, d.iso)},
                                                  {"scramble", io::matrix_to_json(*field, d.scramble)},
                                                  {"public_params", io::params_to_json(image)}});
  std::cout << json{{"secret", (dir / "secret_params.json").string()},
                    {"public", (dir / "public_generator.json").string()},
                    {"disguise", (dir / "disguise.json").string()},
                    {"rank", rank(*field, d.public_g)}}
                   .dump(2)
            << '\n';
  return 0;
}

int cmd_distinguish(const Options& o) {
  if (o.generator.empty()) throw Error(Errc::MalformedInput, "--generator is required");
  const io::PublicCode code = io::public_code_from_json(io::read_json_file(o.generator));
  const Field& f = code.ore.field();
  const std::string method = o.method;
  if (method != "square" && method != "overbeck" && method != "intersection") {
    throw Error(Errc::MalformedInput, "distinguish supports square, overbeck and intersection");
  }

  if (method == "square") {
    const Verdict v = square_distinguisher(f, code.generator, code.comp);
    std::cout << io::verdict_to_json(v, method).dump(2) << '\n';
    return exit_for(v);
  }

  if (o.a_file.empty()) throw Error(Errc::MalformedInput, method + " needs --a-file");
  const auto a = read_vector_file(f, o.a_file, "a");
  if (a.size() != code.comp.ell()) throw Error(Errc::MalformedInput, "a-file length differs from the block count");
  Matrix g = code.generator;
  if (!o.v_file.empty()) {
    auto v = read_vector_file(f, o.v_file, "v");
    if (v.size() != code.comp.ell()) throw Error(Errc::MalformedInput, "v-file length differs from the block count");
    for (auto& e : v) e = f.inv(e);
    g = scale_blocks(f, g, v, code.comp);
  }

  std::vector<Elem> gammas{code.ore.gamma()};
  if (o.sweep_derivations) {
    for (unsigned t = 1; t < f.degree(); ++t) {
      const Elem cand = f.frobenius(code.ore.gamma(), t);
      if (std::find(gammas.begin(), gammas.end(), cand) == gammas.end()) gammas.push_back(cand);
    }
  }

  json result;
  Verdict verdict;
  std::size_t tried = 0;
  for (const Elem gamma : gammas) {
    const OreCtx ore = code.ore.with_gamma(gamma);
    ++tried;
    if (o.sweep_multipliers && method == "overbeck") {
      try {
        const SweepResult sweep = glrs_multiplier_sweep(ore, g, a, code.comp, o.j, o.budget);
        verdict = sweep.verdict;
        result = io::verdict_to_json(verdict, method);
        result["v"] = io::vec_to_json(f, sweep.v);
        result["candidates_tried"] = sweep.candidates_tried;
      } catch (const Error& e) {
        if (e.code() != Errc::BudgetExhausted && e.code() != Errc::StructureNotFound) throw;
        verdict = Verdict{};
        verdict.certainty = e.code() == Errc::BudgetExhausted ? Certainty::Inconclusive : Certainty::Certain;
        result = io::verdict_to_json(verdict, method);
        result["sweep"] = e.what();
      }
    } else {
      verdict = method == "overbeck" ? overbeck_distinguisher(ore, g, a, code.comp, o.j)
                                     : intersection_distinguisher(ore, g, a, code.comp, o.j);
      result = io::verdict_to_json(verdict, method);
    }
    result["gamma"] = io::elem_to_json(f, gamma);
    if (verdict.structured) break;
  }
  result["derivations_tried"] = tried;
  std::cout << result.dump(2) << '\n';
  return exit_for(verdict);
}

int cmd_recover(const Options& o) {
  if (o.generator.empty()) throw Error(Errc::MalformedInput, "--generator is required");
  const io::PublicCode code = io::public_code_from_json(io::read_json_file(o.generator));
  const Field& f = code.ore.field();
  RecoveryOptions opts;
  if (!o.a_file.empty()) opts.a = read_vector_file(f, o.a_file, "a");
  if (!o.v_file.empty()) opts.v = read_vector_file(f, o.v_file, "v");
  json out;
  int status = kExitStructured;
  try {
    out = io::report_to_json(recover_full(code.ore, code.generator, code.comp, opts));
  } catch (const Error& e) {
    if (e.code() != Errc::StructureNotFound && e.code() != Errc::VerificationFailed) throw;
    out = json{{"verified", false}, {"error", e.what()}};
    status = kExitUnstructured;
  }
  if (!o.out.empty()) io::write_json_file(out_dir(o) / "recovery_report.json", out);
  std::cout << out.dump(2) << '\n';
  return status;
}

int cmd_experiment(const Options& o) {
  const ExperimentConfig cfg = to_config(o);
  const ExperimentResult res = run_experiment(cfg);
  const json summary = summary_json(cfg, res);
  if (o.out.empty()) {
    write_csv(std::cout, cfg, res);
    std::cerr << summary.dump(2) << '\n';
  } else {
    const fs::path dir = out_dir(o);
    std::ofstream csv(dir / "experiment.csv");
    write_csv(csv, cfg, res);
    io::write_json_file(dir / "summary.json", summary);
    std::cout << summary.dump(2) << '\n';
  }
  return 0;
}

json describe_code(const OreCtx& ore, const Composition& comp, const Matrix& g) {
  const Field& f = ore.field();
  json info{{"field", io::field_to_json(f)},
            {"theta_l", ore.theta_l()},
            {"gamma", io::elem_to_json(f, ore.gamma())},
            {"comp", io::comp_to_json(comp)},
            {"n", comp.n()},
            {"ell", comp.ell()},
            {"lambda", lambda_of(comp)},
            {"rows", g.rows()},
            {"rank", rank(f, g)}};
  json weights = json::array();
  for (std::size_t r = 0; r < g.rows(); ++r) weights.push_back(sum_rank_weight(f, g.row(r), comp));
  info["row_weights"] = weights;
  try {
    info["min_distance"] = min_distance_bruteforce(f, row_space(f, g).basis, comp);
  } catch (const Error& e) {
    info["min_distance"] = nullptr;
    info["min_distance_skipped"] = e.what();
  }
  return info;
}

int cmd_inspect(const Options& o) {
  json info;
  if (!o.generator.empty()) {
    const io::PublicCode code = io::public_code_from_json(io::read_json_file(o.generator));
    info = describe_code(code.ore, code.comp, code.generator);
  } else if (!o.params.empty()) {
    const GlrsParams p = io::params_from_json(io::read_json_file(o.params));
    try {
      const Matrix g = canonical_generator(p);
      info = describe_code(p.ore, p.comp, g);
      info["valid"] = true;
      info["singleton_bound"] = p.comp.n() - p.k + 1;
    } catch (const Error& e) {
      if (e.code() == Errc::MalformedInput) throw;
      info = json{{"valid", false}, {"error", e.what()}};
    }
  } else {
    throw Error(Errc::MalformedInput, "inspect needs --generator or --params");
  }
  std::cout << info.dump(2) << '\n';
  return 0;
}

void add_code_options(CLI::App* sub, Options& o) {
  sub->add_option("--field", o.field, "p,s,m for F_{q^m} with q = p^s")->capture_default_str();
  sub->add_option("--theta-l", o.theta_l, "θ = Frobenius^l over F_q (0 = identity)")->capture_default_str();
  sub->add_option("--gamma", o.gamma, "derivation γ as comma-separated F_p coefficients");
  sub->add_option("--comp", o.comp, "block lengths, comma-separated")->capture_default_str();
  sub->add_option("--k", o.k, "code dimension")->capture_default_str();
  sub->add_option("--seed", o.seed, "root seed")->capture_default_str();
  sub->add_option("--multipliers", o.multipliers, "ones or random")->capture_default_str();
  sub->add_flag("--semilinear", o.semilinear, "disguise with a field automorphism as well");
}

void add_test_options(CLI::App* sub, Options& o) {
  sub->add_option("--method", o.method, "square, overbeck, intersection (experiment: also recover, wrong_rep)")
      ->capture_default_str();
  sub->add_option("--j", o.j, "stack or intersection depth");
  sub->add_option("--budget", o.budget, "multiplier sweep budget")->capture_default_str();
  sub->add_flag("--sweep-multipliers", o.sweep_multipliers, "search block multipliers with v_1 = 1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum-rank linearized Reed-Solomon codes: keygen, distinguishers and recovery"};
  app.require_subcommand(1);
  Options o;

  auto* keygen = app.add_subcommand("keygen", "generate secret parameters and a disguised public generator");
  add_code_options(keygen, o);
  keygen->add_option("--out", o.out, "output directory");

  auto* distinguish = app.add_subcommand("distinguish", "test a public generator for structure");
  distinguish->add_option("--generator", o.generator, "public generator JSON")->check(CLI::ExistingFile);
  distinguish->add_option("--a-file", o.a_file, "evaluation parameters JSON")->check(CLI::ExistingFile);
  distinguish->add_option("--v-file", o.v_file, "block multipliers JSON")->check(CLI::ExistingFile);
  add_test_options(distinguish, o);
  distinguish->add_flag("--sweep-derivations", o.sweep_derivations, "try every Galois image of γ");

  auto* recover = app.add_subcommand("recover", "recover canonical parameters from a public generator");
  recover->add_option("--generator", o.generator, "public generator JSON")->check(CLI::ExistingFile);
  recover->add_option("--a-file", o.a_file, "known evaluation parameters JSON")->check(CLI::ExistingFile);
  recover->add_option("--v-file", o.v_file, "known block multipliers JSON")->check(CLI::ExistingFile);
  recover->add_option("--out", o.out, "directory for recovery_report.json");

  auto* experiment = app.add_subcommand("experiment", "run a Monte-Carlo campaign");
  add_code_options(experiment, o);
  add_test_options(experiment, o);
  experiment->add_option("--trials", o.trials, "number of trials")->capture_default_str();
  experiment->add_option("--ground-truth", o.mix, "mixed, structured or random")->capture_default_str();
  experiment->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  experiment->add_flag("--record-time", o.record_time, "fill the elapsed column with wall-clock milliseconds");
  experiment->add_option("--out", o.out, "directory for experiment.csv and summary.json");

  auto* inspect = app.add_subcommand("inspect", "describe a generator or a parameter file");
  inspect->add_option("--generator", o.generator, "public generator JSON")->check(CLI::ExistingFile);
  inspect->add_option("--params", o.params, "parameter JSON")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (*keygen) return cmd_keygen(o);
    if (*distinguish) return cmd_distinguish(o);
    if (*recover) return cmd_recover(o);
    if (*experiment) return cmd_experiment(o);
    if (*inspect) return cmd_inspect(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
  return kExitMalformed;
}
