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

#ifndef SCHEDLEARN_MODEL_HPP
#define SCHEDLEARN_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schedlearn/aggregate.hpp"

namespace schedlearn {

// One bound constraint: every value of count_with(X, m, s, kind) must lie in
// [lower, upper]. A missing bound leaves that side unconstrained; at least
// one side is always present.
struct Constraint {
  AggregatorKind kind = AggregatorKind::Sum;
  std::vector<std::string> m_dims;
  std::vector<std::string> s_dims;
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;

  bool operator==(const Constraint&) const = default;
};

// A set of constraints over one schema. Construction validates every
// constraint (dimensions exist, m/s disjoint and non-empty, bounds sane, no
// duplicate (kind, m, s) entries) and canonicalizes m/s to schema order.
class ConstraintModel {
 public:
  ConstraintModel(DimensionSchema schema, std::vector<Constraint> constraints);

  const DimensionSchema& schema() const { return schema_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  bool operator==(const ConstraintModel&) const = default;

 private:
  DimensionSchema schema_;
  std::vector<Constraint> constraints_;
};

struct Violation {
  std::size_t constraint_index = 0;
  IndexTuple where;           // the offending cell over the constraint's s dims
  std::int64_t value = 0;     // the aggregate value found there

  bool operator==(const Violation&) const = default;
};

struct CheckResult {
  bool satisfied = true;
  std::vector<Violation> violations;  // every failure, not just the first
};

// Checks a schedule against a model. The tensor's schema must have the same
// dimension names, sizes and ordered flags as the model's; value labels may
// differ.
CheckResult check(const ScheduleTensor& t, const ConstraintModel& m);

// Deterministic human-readable form, e.g.
// "# of distinct employees / day ≥ 3". Rostering schemas (Nurses, Days,
// Shifts) get domain phrasing; everything else a generic template.
std::string render(const Constraint& c, const DimensionSchema& schema);

// One line describing a violation, for diagnostics.
std::string describe(const Violation& v, const ConstraintModel& m);

}  // namespace schedlearn

#endif  // SCHEDLEARN_MODEL_HPP
