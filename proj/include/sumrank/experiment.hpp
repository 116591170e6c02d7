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

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumrank/codes.hpp"

namespace sumrank {

enum class Method { Square, Overbeck, Intersection, Recover, WrongRep };
enum class GroundTruthMix { Mixed, Structured, Random };

/// Throws MalformedInput on an unknown name.
Method parse_method(std::string_view name);
std::string_view method_label(Method m);
GroundTruthMix parse_mix(std::string_view name);

struct ExperimentConfig {
  unsigned p = 3, s = 1, m = 2;
  unsigned theta_l = 1;
  std::vector<unsigned> gamma;  ///< coefficient array, empty for zero
  std::vector<std::size_t> comp{2, 2};
  std::size_t k = 2;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  Method method = Method::Overbeck;
  Multipliers multipliers = Multipliers::Ones;
  bool semilinear = false;
  std::optional<std::size_t> j;
  std::uint64_t budget = 10000;
  bool sweep_multipliers = false;
  GroundTruthMix mix = GroundTruthMix::Mixed;
  bool record_time = false;
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

struct TrialRecord {
  std::size_t trial_id = 0;
  bool ground_truth_structured = false;
  std::string verdict;  ///< structured, unstructured, inconclusive or error
  std::size_t statistic = 0;
  double elapsed_ms = 0.0;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;  ///< ordered by trial_id
  double total_ms = 0.0;
};

/// Builds the field and Ore context and checks the code shape before any
/// trial runs. Throws the corresponding library errors.
void validate_config(const ExperimentConfig& cfg);

/// Trial t draws everything from derive_rng(seed, t), so it is reproducible
/// in isolation. Trials run on a thread pool.
ExperimentResult run_experiment(const ExperimentConfig& cfg);
TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t trial_id);

/// trial_id,ground_truth,verdict,statistic,elapsed. The elapsed column is
/// empty unless cfg.record_time is set.
void write_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResult& res);
nlohmann::json summary_json(const ExperimentConfig& cfg, const ExperimentResult& res);

}  // namespace sumrank
