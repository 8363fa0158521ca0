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

#ifndef SCHEDLEARN_AGGREGATE_HPP
#define SCHEDLEARN_AGGREGATE_HPP

#include <array>
#include <optional>
#include <string_view>

#include "schedlearn/tensor.hpp"

namespace schedlearn {

// The six aggregation functions. The consecutive kinds traverse a single
// ordered dimension and look at maximal runs of ones (worked slots) or zeros
// (free slots); boundaries terminate runs, there is no wrap-around.
enum class AggregatorKind {
  Nonzero,
  Sum,
  MinConsZero,
  MinConsOne,
  MaxConsZero,
  MaxConsOne,
};

constexpr std::array<AggregatorKind, 6> kAllAggregatorKinds = {
    AggregatorKind::Nonzero,     AggregatorKind::Sum,
    AggregatorKind::MinConsZero, AggregatorKind::MinConsOne,
    AggregatorKind::MaxConsZero, AggregatorKind::MaxConsOne,
};

constexpr bool is_consecutive(AggregatorKind k) {
  return k != AggregatorKind::Nonzero && k != AggregatorKind::Sum;
}

constexpr bool is_min_kind(AggregatorKind k) {
  return k == AggregatorKind::MinConsZero || k == AggregatorKind::MinConsOne;
}

std::string_view to_string(AggregatorKind k);
std::optional<AggregatorKind> aggregator_from_string(std::string_view name);

// Nonzero(t, keep): 1 where the sub-tensor at each retained index contains
// any non-zero cell, else 0. `keep` must be a non-empty subset of the
// schema's dimensions.
AggregateTensor nonzero(const ScheduleTensor& t, const std::vector<std::string>& keep);
AggregateTensor nonzero(const AggregateTensor& t, const std::vector<std::string>& keep);

// Sum(t, keep): sum of all cells of each sub-tensor.
AggregateTensor sum(const ScheduleTensor& t, const std::vector<std::string>& keep);
AggregateTensor sum(const AggregateTensor& t, const std::vector<std::string>& keep);

// Run statistics over the single reduced dimension, which must be ordered.
// Max kinds report 0 for slices without a qualifying run; Min kinds mark the
// cell absent instead (a learned "minimum consecutive" bound would otherwise
// be vacuous). `keep` may be empty when the input is one-dimensional.
AggregateTensor cons_aggregate(const ScheduleTensor& t, AggregatorKind kind,
                               const std::vector<std::string>& keep);
AggregateTensor cons_aggregate(const AggregateTensor& t, AggregatorKind kind,
                               const std::vector<std::string>& keep);

// Count(t, m, s) = Sum(Nonzero(t, m ∪ s), s): for every index over `s`, the
// number of distinct `m`-combinations with at least one worked slot. `m` and
// `s` must be disjoint and non-empty.
AggregateTensor count(const ScheduleTensor& t, const std::vector<std::string>& m,
                      const std::vector<std::string>& s);

// The outer step of the count composition on an already reduced tensor.
AggregateTensor aggregate_with(const AggregateTensor& reduced, AggregatorKind kind,
                               const std::vector<std::string>& keep);

// Count with Sum replaced by `kind`: kind(Nonzero(t, m ∪ s), s). Consecutive
// kinds additionally require `m` to be a single ordered dimension.
AggregateTensor count_with(const ScheduleTensor& t, const std::vector<std::string>& m,
                           const std::vector<std::string>& s, AggregatorKind kind);

}  // namespace schedlearn

#endif  // SCHEDLEARN_AGGREGATE_HPP
