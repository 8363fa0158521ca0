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

#include "schedlearn/aggregate.hpp"

#include <algorithm>
#include <limits>

#include "schedlearn/errors.hpp"
#include "indexing.hpp"

namespace schedlearn {
namespace {

struct ReductionPlan {
  DimensionSchema out_schema;
  std::vector<std::size_t> contrib;       // per input axis: out stride, 0 if reduced
  std::vector<std::size_t> reduced_axes;  // ascending
};

ReductionPlan plan_reduction(const DimensionSchema& in, const std::vector<std::string>& keep,
                             const char* what, bool allow_empty_keep) {
  if (keep.empty() && !allow_empty_keep) {
    throw UsageError(std::string(what) + ": retained dimension set must not be empty");
  }
  const auto keep_axes = detail::axes_of(in, keep, what);

  std::vector<Dimension> out_dims;
  std::vector<bool> kept(in.rank(), false);
  for (auto a : keep_axes) kept[a] = true;

  ReductionPlan plan;
  plan.contrib.assign(in.rank(), 0);
  for (std::size_t a = 0; a < in.rank(); ++a) {
    if (kept[a]) {
      out_dims.push_back(in.dim(a));
    } else {
      plan.reduced_axes.push_back(a);
    }
  }
  plan.out_schema = DimensionSchema{std::move(out_dims)};

  const auto out_strides = detail::row_major_strides(plan.out_schema);
  std::size_t k = 0;
  for (std::size_t a = 0; a < in.rank(); ++a) {
    if (kept[a]) plan.contrib[a] = out_strides[k++];
  }
  return plan;
}

template <class Get>
AggregateTensor reduce_nonzero(const DimensionSchema& in, Get get,
                               const std::vector<std::string>& keep) {
  auto plan = plan_reduction(in, keep, "nonzero", /*allow_empty_keep=*/false);
  std::vector<std::int64_t> out(plan.out_schema.cell_count(), 0);
  detail::for_each_cell(in, plan.contrib, [&](std::size_t flat, std::size_t o) {
    if (get(flat) != 0) out[o] = 1;
  });
  return AggregateTensor(std::move(plan.out_schema), std::move(out));
}

template <class Get>
AggregateTensor reduce_sum(const DimensionSchema& in, Get get,
                           const std::vector<std::string>& keep) {
  auto plan = plan_reduction(in, keep, "sum", /*allow_empty_keep=*/false);
  std::vector<std::int64_t> out(plan.out_schema.cell_count(), 0);
  detail::for_each_cell(in, plan.contrib, [&](std::size_t flat, std::size_t o) {
    out[o] += get(flat);
  });
  return AggregateTensor(std::move(plan.out_schema), std::move(out));
}

// Longest/shortest maximal run of the target symbol in the line read through
// `get` at stride `step`; nullopt when no run exists.
template <class Get>
std::optional<std::int64_t> run_stat(Get get, std::size_t base, std::size_t step,
                                     std::size_t len, AggregatorKind kind) {
  const bool target_ones =
      kind == AggregatorKind::MinConsOne || kind == AggregatorKind::MaxConsOne;
  const bool want_max = !is_min_kind(kind);
  std::int64_t best = want_max ? 0 : std::numeric_limits<std::int64_t>::max();
  std::int64_t run = 0;
  bool any = false;
  for (std::size_t j = 0; j < len; ++j) {
    const bool hit = (get(base + j * step) != 0) == target_ones;
    if (hit) {
      ++run;
    } else if (run > 0) {
      any = true;
      best = want_max ? std::max(best, run) : std::min(best, run);
      run = 0;
    }
  }
  if (run > 0) {
    any = true;
    best = want_max ? std::max(best, run) : std::min(best, run);
  }
  if (!any) {
    if (want_max) return 0;
    return std::nullopt;
  }
  return best;
}

template <class Get>
AggregateTensor reduce_cons(const DimensionSchema& in, Get get, AggregatorKind kind,
                            const std::vector<std::string>& keep) {
  auto plan = plan_reduction(in, keep, "cons_aggregate", /*allow_empty_keep=*/true);
  if (plan.reduced_axes.size() != 1) {
    throw UsageError("consecutive aggregation must reduce exactly one dimension (" +
                     std::to_string(plan.reduced_axes.size()) + " reduced)");
  }
  const std::size_t traversed = plan.reduced_axes[0];
  if (!in.dim(traversed).ordered) {
    throw UsageError("consecutive aggregation needs an ordered dimension; '" +
                     in.dim(traversed).name + "' is unordered");
  }
  const auto in_strides = detail::row_major_strides(in);
  const std::size_t step = in_strides[traversed];
  const std::size_t len = in.size(traversed);

  // Walk the output cells; for each, the input base address is the cell with
  // the traversed coordinate at 0.
  std::vector<std::size_t> base_contrib(plan.out_schema.rank(), 0);
  std::size_t k = 0;
  for (std::size_t a = 0; a < in.rank(); ++a) {
    if (a != traversed) base_contrib[k++] = in_strides[a];
  }

  const std::size_t out_n = plan.out_schema.cell_count();
  std::vector<std::int64_t> out(out_n, 0);
  std::vector<std::uint8_t> present(out_n, 1);
  // Identity contribution: visit(out_flat, input_base).
  detail::for_each_cell(plan.out_schema, base_contrib, [&](std::size_t o, std::size_t base) {
    if (auto v = run_stat(get, base, step, len, kind)) {
      out[o] = *v;
    } else {
      present[o] = 0;
    }
  });
  return AggregateTensor(std::move(plan.out_schema), std::move(out), std::move(present));
}

const std::vector<std::uint8_t>& require_all_present(const AggregateTensor& t,
                                                     const char* what) {
  if (!t.all_present()) {
    throw UsageError(std::string(what) + ": input aggregate has absent cells");
  }
  return t.present_mask();
}

std::vector<std::string> union_names(const DimensionSchema& schema,
                                     const std::vector<std::string>& m,
                                     const std::vector<std::string>& s) {
  if (m.empty() || s.empty()) {
    throw UsageError("count: M and S must both be non-empty");
  }
  const auto m_axes = detail::axes_of(schema, m, "count (M)");
  const auto s_axes = detail::axes_of(schema, s, "count (S)");
  std::vector<std::size_t> both;
  std::set_intersection(m_axes.begin(), m_axes.end(), s_axes.begin(), s_axes.end(),
                        std::back_inserter(both));
  if (!both.empty()) {
    throw UsageError("count: M and S overlap on dimension '" + schema.dim(both[0]).name +
                     "'");
  }
  std::vector<std::size_t> u;
  std::set_union(m_axes.begin(), m_axes.end(), s_axes.begin(), s_axes.end(),
                 std::back_inserter(u));
  std::vector<std::string> names;
  names.reserve(u.size());
  for (auto a : u) names.push_back(schema.dim(a).name);
  return names;
}

}  // namespace

std::string_view to_string(AggregatorKind k) {
  switch (k) {
    case AggregatorKind::Nonzero: return "Nonzero";
    case AggregatorKind::Sum: return "Sum";
    case AggregatorKind::MinConsZero: return "MinConsZero";
    case AggregatorKind::MinConsOne: return "MinConsOne";
    case AggregatorKind::MaxConsZero: return "MaxConsZero";
    case AggregatorKind::MaxConsOne: return "MaxConsOne";
  }
  return "?";
}

std::optional<AggregatorKind> aggregator_from_string(std::string_view name) {
  for (auto k : kAllAggregatorKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

AggregateTensor nonzero(const ScheduleTensor& t, const std::vector<std::string>& keep) {
  const auto& cells = t.cells();
  return reduce_nonzero(t.schema(), [&](std::size_t i) { return cells[i]; }, keep);
}

AggregateTensor nonzero(const AggregateTensor& t, const std::vector<std::string>& keep) {
  require_all_present(t, "nonzero");
  const auto& vals = t.values();
  return reduce_nonzero(t.schema(), [&](std::size_t i) { return vals[i]; }, keep);
}

AggregateTensor sum(const ScheduleTensor& t, const std::vector<std::string>& keep) {
  const auto& cells = t.cells();
  return reduce_sum(t.schema(), [&](std::size_t i) { return cells[i]; }, keep);
}

AggregateTensor sum(const AggregateTensor& t, const std::vector<std::string>& keep) {
  require_all_present(t, "sum");
  const auto& vals = t.values();
  return reduce_sum(t.schema(), [&](std::size_t i) { return vals[i]; }, keep);
}

AggregateTensor cons_aggregate(const ScheduleTensor& t, AggregatorKind kind,
                               const std::vector<std::string>& keep) {
  if (!is_consecutive(kind)) {
    throw UsageError("cons_aggregate: kind must be one of the consecutive aggregators");
  }
  const auto& cells = t.cells();
  return reduce_cons(t.schema(), [&](std::size_t i) { return cells[i]; }, kind, keep);
}

AggregateTensor cons_aggregate(const AggregateTensor& t, AggregatorKind kind,
                               const std::vector<std::string>& keep) {
  if (!is_consecutive(kind)) {
    throw UsageError("cons_aggregate: kind must be one of the consecutive aggregators");
  }
  require_all_present(t, "cons_aggregate");
  const auto& vals = t.values();
  return reduce_cons(t.schema(), [&](std::size_t i) { return vals[i]; }, kind, keep);
}

AggregateTensor count(const ScheduleTensor& t, const std::vector<std::string>& m,
                      const std::vector<std::string>& s) {
  return sum(nonzero(t, union_names(t.schema(), m, s)), s);
}

AggregateTensor aggregate_with(const AggregateTensor& reduced, AggregatorKind kind,
                               const std::vector<std::string>& keep) {
  switch (kind) {
    case AggregatorKind::Nonzero: return nonzero(reduced, keep);
    case AggregatorKind::Sum: return sum(reduced, keep);
    default: return cons_aggregate(reduced, kind, keep);
  }
}

AggregateTensor count_with(const ScheduleTensor& t, const std::vector<std::string>& m,
                           const std::vector<std::string>& s, AggregatorKind kind) {
  return aggregate_with(nonzero(t, union_names(t.schema(), m, s)), kind, s);
}

}  // namespace schedlearn
