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

#include "schedlearn/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "schedlearn/errors.hpp"
#include "indexing.hpp"

namespace schedlearn {
namespace {

// Sorts dimension names into schema order (validating them on the way).
std::vector<std::string> canonical_names(const DimensionSchema& schema,
                                         const std::vector<std::string>& names,
                                         const char* what) {
  const auto axes = detail::axes_of(schema, names, what);
  std::vector<std::string> out;
  out.reserve(axes.size());
  for (auto a : axes) out.push_back(schema.dim(a).name);
  return out;
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

bool name_set_is(const std::vector<std::string>& names, std::initializer_list<const char*> set) {
  if (names.size() != set.size()) return false;
  for (const char* n : set) {
    if (std::find(names.begin(), names.end(), n) == names.end()) return false;
  }
  return true;
}

// Table of rostering phrases for the Count composition on the classic
// (Nurses, Days, Shifts) vocabulary.
const char* rostering_sum_phrase(const Constraint& c) {
  const auto& m = c.m_dims;
  const auto& s = c.s_dims;
  if (name_set_is(m, {"Days"}) && name_set_is(s, {"Nurses"})) return "# of working days / Nurse";
  if (name_set_is(m, {"Days", "Shifts"}) && name_set_is(s, {"Nurses"}))
    return "# of working shifts / Nurse";
  if (name_set_is(m, {"Nurses"}) && name_set_is(s, {"Days"}))
    return "# of distinct employees / day";
  if (name_set_is(m, {"Shifts"}) && name_set_is(s, {"Days"}))
    return "# of shifts for each day with at least one nurse working";
  if (name_set_is(m, {"Shifts"}) && name_set_is(s, {"Nurses", "Days"}))
    return "# of working shifts per day per nurse";
  if (name_set_is(m, {"Days"}) && name_set_is(s, {"Nurses", "Shifts"}))
    return "# of working days in the same shift / nurse";
  if (name_set_is(m, {"Nurses"}) && name_set_is(s, {"Days", "Shifts"}))
    return "# of nurses / shift each day";
  return nullptr;
}

const char* rostering_cons_phrase(const Constraint& c) {
  if (!(name_set_is(c.m_dims, {"Days"}) && name_set_is(c.s_dims, {"Nurses"}))) return nullptr;
  switch (c.kind) {
    case AggregatorKind::MaxConsOne: return "max consecutive working days per Nurse";
    case AggregatorKind::MinConsOne: return "min consecutive working days per Nurse";
    case AggregatorKind::MaxConsZero: return "max consecutive days off per Nurse";
    case AggregatorKind::MinConsZero: return "min consecutive days off per Nurse";
    default: return nullptr;
  }
}

bool is_rostering_schema(const DimensionSchema& schema) {
  return schema.rank() == 3 && schema.find_axis("Nurses") && schema.find_axis("Days") &&
         schema.find_axis("Shifts");
}

}  // namespace

ConstraintModel::ConstraintModel(DimensionSchema schema, std::vector<Constraint> constraints)
    : schema_(std::move(schema)), constraints_(std::move(constraints)) {
  std::set<std::tuple<AggregatorKind, std::vector<std::string>, std::vector<std::string>>> seen;
  for (auto& c : constraints_) {
    c.m_dims = canonical_names(schema_, c.m_dims, "constraint M");
    c.s_dims = canonical_names(schema_, c.s_dims, "constraint S");
    if (c.m_dims.empty() || c.s_dims.empty()) {
      throw UsageError("constraint M and S must both be non-empty");
    }
    for (const auto& name : c.m_dims) {
      if (std::find(c.s_dims.begin(), c.s_dims.end(), name) != c.s_dims.end()) {
        throw UsageError("constraint M and S overlap on dimension '" + name + "'");
      }
    }
    if (!c.lower && !c.upper) {
      throw UsageError("constraint needs at least one bound");
    }
    if (c.lower && *c.lower < 0) throw UsageError("constraint lower bound must be >= 0");
    if (c.upper && *c.upper < 0) throw UsageError("constraint upper bound must be >= 0");
    if (c.lower && c.upper && *c.lower > *c.upper) {
      throw UsageError("constraint lower bound exceeds upper bound");
    }
    if (!seen.insert({c.kind, c.m_dims, c.s_dims}).second) {
      throw UsageError("duplicate constraint for (" + std::string(to_string(c.kind)) + ", {" +
                       join(c.m_dims) + "}, {" + join(c.s_dims) + "})");
    }
  }
}

CheckResult check(const ScheduleTensor& t, const ConstraintModel& m) {
  if (!t.schema().same_shape(m.schema())) {
    throw SchemaError("schedule schema does not match the model's dimensions");
  }
  CheckResult result;
  // Constraints sharing M ∪ S reuse one Nonzero reduction.
  std::map<std::vector<std::string>, AggregateTensor> reduced;
  for (std::size_t ci = 0; ci < m.constraints().size(); ++ci) {
    const Constraint& c = m.constraints()[ci];
    std::vector<std::string> u = canonical_names(
        t.schema(), [&] {
          std::vector<std::string> names = c.m_dims;
          names.insert(names.end(), c.s_dims.begin(), c.s_dims.end());
          return names;
        }(), "check");
    auto it = reduced.find(u);
    if (it == reduced.end()) {
      it = reduced.emplace(u, nonzero(t, u)).first;
    }
    const AggregateTensor agg = aggregate_with(it->second, c.kind, c.s_dims);

    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < agg.size(); ++i) {
      if (!agg.present(i)) continue;
      const std::int64_t v = agg.value(i);
      if ((c.lower && v < *c.lower) || (c.upper && v > *c.upper)) bad.push_back(i);
    }
    if (bad.empty()) continue;
    const auto cells = enumerate_product(agg.schema(), c.s_dims);
    for (auto i : bad) {
      result.violations.push_back(Violation{ci, cells[i], agg.value(i)});
    }
  }
  result.satisfied = result.violations.empty();
  return result;
}

std::string render(const Constraint& c, const DimensionSchema& schema) {
  std::string phrase;
  if (is_rostering_schema(schema)) {
    if (c.kind == AggregatorKind::Sum) {
      if (const char* p = rostering_sum_phrase(c)) phrase = p;
    } else if (is_consecutive(c.kind)) {
      if (const char* p = rostering_cons_phrase(c)) phrase = p;
    }
  }
  if (phrase.empty()) {
    switch (c.kind) {
      case AggregatorKind::Sum:
        phrase = "# of distinct (" + join(c.m_dims) + ") per (" + join(c.s_dims) + ")";
        break;
      case AggregatorKind::Nonzero:
        phrase = "presence of any (" + join(c.m_dims) + ") per (" + join(c.s_dims) + ")";
        break;
      case AggregatorKind::MaxConsOne:
        phrase = "max consecutive active " + c.m_dims[0] + " per (" + join(c.s_dims) + ")";
        break;
      case AggregatorKind::MinConsOne:
        phrase = "min consecutive active " + c.m_dims[0] + " per (" + join(c.s_dims) + ")";
        break;
      case AggregatorKind::MaxConsZero:
        phrase = "max consecutive inactive " + c.m_dims[0] + " per (" + join(c.s_dims) + ")";
        break;
      case AggregatorKind::MinConsZero:
        phrase = "min consecutive inactive " + c.m_dims[0] + " per (" + join(c.s_dims) + ")";
        break;
    }
  }
  if (c.lower && c.upper) {
    return phrase + " between " + std::to_string(*c.lower) + " and " + std::to_string(*c.upper);
  }
  if (c.lower) return phrase + " ≥ " + std::to_string(*c.lower);
  return phrase + " ≤ " + std::to_string(*c.upper);
}

std::string describe(const Violation& v, const ConstraintModel& m) {
  const Constraint& c = m.constraints().at(v.constraint_index);
  std::ostringstream out;
  out << render(c, m.schema()) << " violated at {";
  bool first = true;
  for (const auto& [name, label] : v.where) {
    if (!first) out << ", ";
    out << name << ": " << label;
    first = false;
  }
  out << "} with value " << v.value;
  return out.str();
}

}  // namespace schedlearn
