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

#include "sumrank/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include "sumrank/distinguishers.hpp"
#include "sumrank/error.hpp"
#include "sumrank/isometry.hpp"
#include "sumrank/recovery.hpp"

namespace sumrank {

namespace {

struct Setting {
  FieldPtr field;
  OreCtx ore;
  Composition comp;
};

Setting make_setting(const ExperimentConfig& cfg) {
  auto field = Field::build(cfg.p, cfg.s, cfg.m);
  const Elem gamma = field->from_coeffs(cfg.gamma);
  return Setting{field, OreCtx(field, cfg.theta_l, gamma), Composition(cfg.comp)};
}

Matrix random_full_rank(const Field& f, std::size_t k, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix g = random_matrix(f, k, n, rng);
    if (rank(f, g) == k) return g;
  }
}

std::string verdict_label(const Verdict& v) {
  if (v.structured) return "structured";
  if (v.certainty == Certainty::Inconclusive) return "inconclusive";
  return "unstructured";
}

TrialRecord run_in_setting(const ExperimentConfig& cfg, const Setting& st, std::size_t trial_id) {
  const auto start = std::chrono::steady_clock::now();
  const Field& f = *st.field;
  Rng rng = derive_rng(cfg.seed, trial_id);
  TrialRecord rec;
  rec.trial_id = trial_id;
  switch (cfg.mix) {
    case GroundTruthMix::Mixed:
      rec.ground_truth_structured = trial_id % 2 == 0;
      break;
    case GroundTruthMix::Structured:
      rec.ground_truth_structured = true;
      break;
    case GroundTruthMix::Random:
      rec.ground_truth_structured = false;
      break;
  }
  if (cfg.method == Method::WrongRep) rec.ground_truth_structured = true;

  try {
    OreCtx ore = st.ore;
    Matrix g;
    std::vector<Elem> a;
    std::vector<Elem> v(st.comp.ell(), kOne);
    if (rec.ground_truth_structured) {
      const GlrsParams params = random_glrs(st.ore, st.comp, cfg.k, rng, cfg.multipliers);
      const Disguise d = random_disguise(params, rng, cfg.semilinear);
      const GlrsParams image = transport_params(d.iso, params);
      g = d.public_g;
      ore = image.ore;
      a = image.a;
      v = image.v;
    } else {
      g = random_full_rank(f, cfg.k, st.comp.n(), rng);
      a = st.ore.sample_class_reps(st.comp.ell(), rng);
    }
    std::vector<Elem> v_inv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) v_inv[i] = f.inv(v[i]);

    Verdict verdict;
    switch (cfg.method) {
      case Method::Square:
        verdict = square_distinguisher(f, g, st.comp);
        break;
      case Method::Overbeck:
        if (cfg.sweep_multipliers) {
          try {
            verdict = glrs_multiplier_sweep(ore, g, a, st.comp, cfg.j, cfg.budget).verdict;
          } catch (const Error& e) {
            if (e.code() == Errc::BudgetExhausted) {
              verdict.certainty = Certainty::Inconclusive;
            } else if (e.code() != Errc::StructureNotFound) {
              throw;
            }
          }
        } else {
          verdict = overbeck_distinguisher(ore, scale_blocks(f, g, v_inv, st.comp), a, st.comp, cfg.j);
        }
        break;
      case Method::Intersection:
        verdict = intersection_distinguisher(ore, scale_blocks(f, g, v_inv, st.comp), a, st.comp, cfg.j);
        break;
      case Method::Recover: {
        RecoveryOptions opts;
        if (!ore.is_identity()) {
          opts.a = a;
          opts.v = v;
        }
        try {
          recover_full(ore, g, st.comp, opts);
          verdict.structured = true;
          verdict.statistic = 1;
        } catch (const Error& e) {
          if (e.code() != Errc::StructureNotFound && e.code() != Errc::VerificationFailed) throw;
        }
        break;
      }
      case Method::WrongRep: {
        std::vector<Elem> wrong(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
          do {
            wrong[i] = ore.conjugate(a[i], f.random_nonzero(rng));
          } while (wrong[i] == a[i]);
        }
        verdict = overbeck_distinguisher(ore, scale_blocks(f, g, v_inv, st.comp), wrong, st.comp, cfg.j);
        break;
      }
    }
    rec.verdict = verdict_label(verdict);
    rec.statistic = verdict.statistic;
  } catch (const Error&) {
    rec.verdict = "error";
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace

Method parse_method(std::string_view name) {
  if (name == "square") return Method::Square;
  if (name == "overbeck") return Method::Overbeck;
  if (name == "intersection") return Method::Intersection;
  if (name == "recover") return Method::Recover;
  if (name == "wrong_rep") return Method::WrongRep;
  throw Error(Errc::MalformedInput, "unknown method " + std::string(name));
}

std::string_view method_label(Method m) {
  switch (m) {
    case Method::Square:
      return "square";
    case Method::Overbeck:
      return "overbeck";
    case Method::Intersection:
      return "intersection";
    case Method::Recover:
      return "recover";
    case Method::WrongRep:
      return "wrong_rep";
  }
  return "unknown";
}

GroundTruthMix parse_mix(std::string_view name) {
  if (name == "mixed") return GroundTruthMix::Mixed;
  if (name == "structured") return GroundTruthMix::Structured;
  if (name == "random") return GroundTruthMix::Random;
  throw Error(Errc::MalformedInput, "unknown ground-truth mix " + std::string(name));
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.trials == 0) throw Error(Errc::MalformedInput, "trials must be positive");
  const Setting st = make_setting(cfg);
  const std::size_t n = st.comp.n();
  if (cfg.k < 1 || cfg.k > n) throw Error(Errc::BadDimension, "dimension must lie in [1, n]");
  // One throwaway draw exercises every parameter check.
  Rng probe = derive_rng(cfg.seed, ~std::uint64_t{0});
  random_glrs(st.ore, st.comp, cfg.k, probe, cfg.multipliers);
  switch (cfg.method) {
    case Method::Square:
      if (!st.ore.is_identity()) throw Error(Errc::PreconditionViolated, "square-code test needs θ = Id");
      if (cfg.k <= 2 || 2 * cfg.k > n) throw Error(Errc::PreconditionViolated, "square-code test needs 2 < k <= n/2");
      break;
    case Method::Overbeck:
    case Method::WrongRep:
      if (cfg.j) {
        if (*cfg.j + cfg.k > n) throw Error(Errc::BadJ, "stack depth exceeds n-k");
      } else {
        default_overbeck_j(cfg.k, n);
      }
      if (cfg.method == Method::WrongRep && st.ore.is_identity()) {
        throw Error(Errc::PreconditionViolated, "every conjugacy class is a single element when θ = Id");
      }
      break;
    case Method::Intersection:
      if (cfg.j.value_or(1) >= cfg.k) throw Error(Errc::BadJ, "intersection depth must be below k");
      break;
    case Method::Recover:
      if (!st.ore.zero_derivation()) {
        throw Error(Errc::UnsupportedRegime, "recovery with a nonzero derivation is not supported");
      }
      break;
  }
}

TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t trial_id) {
  return run_in_setting(cfg, make_setting(cfg), trial_id);
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const auto start = std::chrono::steady_clock::now();
  const Setting st = make_setting(cfg);
  ExperimentResult res;
  res.records.resize(cfg.trials);
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cfg.trials));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t = next++; t < cfg.trials; t = next++) res.records[t] = run_in_setting(cfg, st, t);
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  res.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

void write_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResult& res) {
  out << "trial_id,ground_truth,verdict,statistic,elapsed\n";
  for (const auto& r : res.records) {
    out << r.trial_id << ',' << (r.ground_truth_structured ? "structured" : "random") << ',' << r.verdict << ','
        << r.statistic << ',';
    if (cfg.record_time) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.elapsed_ms);
      out << buf;
    }
    out << '\n';
  }
}

nlohmann::json summary_json(const ExperimentConfig& cfg, const ExperimentResult& res) {
  std::size_t pos = 0, neg = 0, tp = 0, fp = 0, inconclusive = 0, errors = 0;
  for (const auto& r : res.records) {
    const bool said_structured = r.verdict == "structured";
    if (r.ground_truth_structured) {
      ++pos;
      tp += said_structured;
    } else {
      ++neg;
      fp += said_structured;
    }
    inconclusive += r.verdict == "inconclusive";
    errors += r.verdict == "error";
  }
  auto rate = [](std::size_t num, std::size_t den) -> nlohmann::json {
    if (den == 0) return nullptr;
    return static_cast<double>(num) / static_cast<double>(den);
  };
  return nlohmann::json{{"method", method_label(cfg.method)},
                        {"seed", cfg.seed},
                        {"trials", res.records.size()},
                        {"structured_trials", pos},
                        {"random_trials", neg},
                        {"true_positives", tp},
                        {"false_positives", fp},
                        {"true_positive_rate", rate(tp, pos)},
                        {"false_positive_rate", rate(fp, neg)},
                        {"inconclusive", inconclusive},
                        {"errors", errors},
                        {"config",
                         {{"field", {cfg.p, cfg.s, cfg.m}},
                          {"theta_l", cfg.theta_l},
                          {"gamma", cfg.gamma},
                          {"comp", cfg.comp},
                          {"k", cfg.k},
                          {"multipliers", cfg.multipliers == Multipliers::Ones ? "ones" : "random"},
                          {"semilinear", cfg.semilinear},
                          {"j", cfg.j ? nlohmann::json(*cfg.j) : nlohmann::json(nullptr)},
                          {"sweep_multipliers", cfg.sweep_multipliers}}},
                        {"timing", {{"total_ms", res.total_ms}}}};
}

}  // namespace sumrank
