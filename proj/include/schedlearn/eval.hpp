// Copyright 2026 The schedlearn Authors
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

#ifndef SCHEDLEARN_EVAL_HPP
#define SCHEDLEARN_EVAL_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "schedlearn/generator.hpp"
#include "schedlearn/learner.hpp"

namespace schedlearn {

// A named evaluation setting: the ground-truth model whose samples act as
// training examples, the background knowledge handed to the learner, and the
// generator settings that keep sampling feasible for this model.
struct Scenario {
  std::string name;
  ConstraintModel target;
  BackgroundKnowledge bk;
  GeneratorConfig generator;
};

struct EvalConfig {
  int pool_size = 2000;
  std::vector<int> train_sizes = {1, 5, 10, 20, 50};
  int trials = 5;
  std::uint64_t seed = kDefaultSeed;
  int precision_samples = 100;  // fresh samples drawn per learned model
};

struct EvalCell {
  int train_size = 0;
  int trial = 0;
  double recall = 0.0;          // fraction of the whole pool accepted
  double recall_heldout = 0.0;  // same, excluding the training examples
  double precision = 0.0;
  double learn_seconds = 0.0;   // the learn() call only
  int n_constraints = 0;
};

struct EvalSummary {
  int train_size = 0;
  double recall = 0.0;
  double recall_heldout = 0.0;
  double precision = 0.0;
  double learn_seconds = 0.0;
  double n_constraints = 0.0;
};

struct EvalReport {
  std::string scenario;
  std::vector<EvalCell> cells;
  std::vector<EvalSummary> averages;  // one per train size
};

// Fraction of the pool satisfying `learned`. Callers guarantee the pool
// consists of solutions of `target`, which makes this an estimate of
// |Sol(target) ∩ Sol(learned)| / |Sol(target)| under the sampler that built
// the pool.
double estimate_recall(const ConstraintModel& target, const ConstraintModel& learned,
                       const std::vector<ScheduleTensor>& pool);

struct PrecisionEstimate {
  double value = 0.0;
  int samples = 0;      // how many learned-model samples were produced
  bool complete = true; // false when the generator budget ran out early
};

// Draws samples from `learned` and reports the fraction satisfying `target`.
// On generator exhaustion the estimate covers the samples produced so far.
PrecisionEstimate estimate_precision(const ConstraintModel& target,
                                     const ConstraintModel& learned, int n_samples,
                                     const GeneratorConfig& cfg);

// The full protocol: builds a sample pool from the target, then for every
// train size and trial draws a seeded training subset, learns (timing the
// learn call alone), and estimates recall (full pool and held-out) and
// precision. Deterministic up to the measured times.
EvalReport run_experiment(const Scenario& scenario, const EvalConfig& cfg);

// Columns: scenario,train_size,trial,recall,recall_heldout,precision,
// learn_seconds,n_constraints.
void write_report_csv(const EvalReport& report, const std::filesystem::path& path);

// Two side-by-side line charts: average recall vs train size, average learn
// time vs train size.
void write_report_svg(const EvalReport& report, const std::filesystem::path& path);

}  // namespace schedlearn

#endif  // SCHEDLEARN_EVAL_HPP
