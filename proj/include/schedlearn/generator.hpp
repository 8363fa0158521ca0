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

#ifndef SCHEDLEARN_GENERATOR_HPP
#define SCHEDLEARN_GENERATOR_HPP

#include <cstdint>
#include <vector>

#include "schedlearn/model.hpp"

namespace schedlearn {

// Default seed used everywhere randomness is optional, so that runs without
// an explicit --seed are still reproducible.
inline constexpr std::uint64_t kDefaultSeed = 1729;

struct GeneratorConfig {
  std::uint64_t seed = kDefaultSeed;
  int max_repair_steps = 10000;
  int restarts = 50;
  double initial_density = 0.2;  // probability of a 1 in the initial tensor
};

// Sum over the constraint's s-cells of the distance of the aggregate value
// from [lower, upper]; 0 iff the constraint is satisfied. Absent cells
// (MinCons* with no qualifying run) contribute nothing.
std::int64_t violation_magnitude(const ScheduleTensor& t, const Constraint& c);

// Thrown when the repair budget runs out before `requested` samples were
// found; carries the ones that succeeded.
class GenerationBudgetError : public Error {
 public:
  GenerationBudgetError(const std::string& message, std::vector<ScheduleTensor> partial,
                        int requested)
      : Error(message), partial_(std::move(partial)), requested_(requested) {}

  const std::vector<ScheduleTensor>& partial() const { return partial_; }
  int requested() const { return requested_; }

 private:
  std::vector<ScheduleTensor> partial_;
  int requested_;
};

// Draws `n` schedules satisfying the model: each sample starts from a random
// binary tensor at `initial_density` and is repaired by repeatedly picking a
// violated constraint uniformly at random and flipping a cell that reduces
// its violation magnitude (ties broken by the seeded RNG), restarting when
// stuck. Sample i draws from an RNG stream derived from (seed, i), so the
// output is reproducible and order-independent. Not a uniform sampler over
// the model's solutions; estimates built on it are estimates under this
// sampler.
std::vector<ScheduleTensor> generate(const ConstraintModel& m, int n,
                                     const GeneratorConfig& cfg = {});

}  // namespace schedlearn

#endif  // SCHEDLEARN_GENERATOR_HPP
