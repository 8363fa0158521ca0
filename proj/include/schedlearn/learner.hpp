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

#ifndef SCHEDLEARN_LEARNER_HPP
#define SCHEDLEARN_LEARNER_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "schedlearn/model.hpp"

namespace schedlearn {

// A user-declared (m, s) pair whose candidates are meaningless for the
// domain and must be skipped during enumeration.
struct Exclusion {
  std::vector<std::string> m_dims;
  std::vector<std::string> s_dims;
  std::string note;

  bool operator==(const Exclusion&) const = default;
};

struct BackgroundKnowledge {
  std::vector<Exclusion> exclude;

  bool operator==(const BackgroundKnowledge&) const = default;
};

// An (aggregator, m, s) triple to evaluate.
struct Candidate {
  AggregatorKind kind = AggregatorKind::Sum;
  std::vector<std::string> m_dims;
  std::vector<std::string> s_dims;

  bool operator==(const Candidate&) const = default;
};

inline constexpr std::size_t kNoDimCap = std::numeric_limits<std::size_t>::max();

// Every pair of disjoint non-empty dimension subsets (m, s), crossed with the
// aggregator kinds, in a deterministic canonical order. Consecutive kinds are
// emitted only when m is a single ordered dimension; excluded pairs are
// skipped entirely. `max_union_dims` caps |m ∪ s| (the candidate count grows
// exponentially with the rank otherwise).
std::vector<Candidate> enumerate_candidates(const DimensionSchema& schema,
                                            const BackgroundKnowledge& bk = {},
                                            std::size_t max_union_dims = kNoDimCap);

// The pooled min/max observed for one candidate across all examples.
// `support` is the number of aggregate values that contributed.
struct CandidateBound {
  AggregatorKind kind = AggregatorKind::Sum;
  std::vector<std::string> m_dims;
  std::vector<std::string> s_dims;
  std::int64_t observed_min = 0;
  std::int64_t observed_max = 0;
  std::size_t support = 0;
};

enum class TrivialDecision { Keep, DropLower, DropUpper, DropBoth };

// Largest value count_with(X, m, s, kind) can take for any X: 1 for Nonzero,
// |⊗(m)| for Sum, and the traversed dimension's size for consecutive kinds.
std::int64_t max_attainable(const DimensionSchema& schema, AggregatorKind kind,
                            const std::vector<std::string>& m_dims,
                            const std::vector<std::string>& s_dims);

// Drops bounds that carry no information: a lower bound of 0, or an upper
// bound equal to the maximum attainable value of the composition.
TrivialDecision filter_trivial(const CandidateBound& cb, const DimensionSchema& schema);

// Learns a constraint model from example schedules (all over one schema):
// for every candidate, the aggregate values of all examples are pooled and
// their min/max recorded as bounds, then trivial bounds are filtered out.
// Every example satisfies the returned model. Deterministic.
ConstraintModel learn(const std::vector<ScheduleTensor>& examples,
                      const BackgroundKnowledge& bk = {},
                      std::size_t max_union_dims = kNoDimCap);

}  // namespace schedlearn

#endif  // SCHEDLEARN_LEARNER_HPP
