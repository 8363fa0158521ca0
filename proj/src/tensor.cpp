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

#include "schedlearn/tensor.hpp"

#include <algorithm>

#include "schedlearn/errors.hpp"
#include "indexing.hpp"

namespace schedlearn {
namespace {

// Resolves an index tuple to (axis, value position) pairs. Every named
// dimension and label must exist in the schema.
std::vector<std::pair<std::size_t, std::size_t>> resolve(const DimensionSchema& schema,
                                                         const IndexTuple& tuple) {
  std::vector<std::pair<std::size_t, std::size_t>> fixed;
  fixed.reserve(tuple.size());
  for (const auto& [name, label] : tuple) {
    const std::size_t axis = schema.axis(name);
    fixed.emplace_back(axis, schema.value_index(axis, label));
  }
  std::sort(fixed.begin(), fixed.end());
  return fixed;
}

}  // namespace

ScheduleTensor::ScheduleTensor(DimensionSchema schema, std::vector<std::uint8_t> cells)
    : schema_(std::move(schema)), cells_(std::move(cells)) {
  if (cells_.size() != schema_.cell_count()) {
    throw UsageError("tensor data length " + std::to_string(cells_.size()) +
                     " does not match schema cell count " +
                     std::to_string(schema_.cell_count()));
  }
  for (auto v : cells_) {
    if (v > 1) throw UsageError("tensor cells must be 0 or 1");
  }
}

ScheduleTensor ScheduleTensor::zeros(DimensionSchema schema) {
  const std::size_t n = schema.cell_count();
  return ScheduleTensor(std::move(schema), std::vector<std::uint8_t>(n, 0));
}

int ScheduleTensor::cell(const IndexTuple& full) const {
  const auto fixed = resolve(schema_, full);
  if (fixed.size() != schema_.rank()) {
    throw UsageError("cell() requires every dimension to be fixed (" +
                     std::to_string(fixed.size()) + " of " + std::to_string(schema_.rank()) +
                     " given)");
  }
  const auto strides = detail::row_major_strides(schema_);
  std::size_t flat = 0;
  for (const auto& [axis, pos] : fixed) flat += strides[axis] * pos;
  return cells_[flat];
}

ScheduleTensor ScheduleTensor::slice(const IndexTuple& fix) const {
  const auto fixed = resolve(schema_, fix);
  if (fixed.size() >= schema_.rank()) {
    throw UsageError("slice() must fix a strict subset of dimensions; use cell() instead");
  }
  if (fixed.empty()) return *this;

  std::vector<Dimension> remaining;
  std::size_t next_fixed = 0;
  std::vector<std::size_t> fixed_pos(schema_.rank(), 0);
  std::vector<bool> is_fixed(schema_.rank(), false);
  for (std::size_t a = 0; a < schema_.rank(); ++a) {
    if (next_fixed < fixed.size() && fixed[next_fixed].first == a) {
      is_fixed[a] = true;
      fixed_pos[a] = fixed[next_fixed].second;
      ++next_fixed;
    } else {
      remaining.push_back(schema_.dim(a));
    }
  }
  DimensionSchema out_schema{std::move(remaining)};

  const auto in_strides = detail::row_major_strides(schema_);
  const auto out_strides = detail::row_major_strides(out_schema);

  std::size_t base = 0;
  std::vector<std::size_t> contrib(out_schema.rank(), 0);
  std::size_t k = 0;
  for (std::size_t a = 0; a < schema_.rank(); ++a) {
    if (is_fixed[a]) {
      base += in_strides[a] * fixed_pos[a];
    } else {
      contrib[k++] = in_strides[a];
    }
  }

  std::vector<std::uint8_t> out(out_schema.cell_count());
  detail::for_each_cell(out_schema, contrib, [&](std::size_t out_flat, std::size_t in_off) {
    out[out_flat] = cells_[base + in_off];
  });
  return ScheduleTensor(std::move(out_schema), std::move(out));
}

AggregateTensor::AggregateTensor(DimensionSchema schema, std::vector<std::int64_t> values)
    : AggregateTensor(std::move(schema), std::move(values), {}) {}

AggregateTensor::AggregateTensor(DimensionSchema schema, std::vector<std::int64_t> values,
                                 std::vector<std::uint8_t> present)
    : schema_(std::move(schema)), values_(std::move(values)), present_(std::move(present)) {
  if (values_.size() != schema_.cell_count()) {
    throw UsageError("aggregate data length does not match schema cell count");
  }
  if (present_.empty()) {
    present_.assign(values_.size(), 1);
  } else if (present_.size() != values_.size()) {
    throw UsageError("aggregate presence mask length does not match data length");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (present_[i] && values_[i] < 0) {
      throw UsageError("aggregate values must be non-negative");
    }
  }
}

bool AggregateTensor::all_present() const {
  return std::all_of(present_.begin(), present_.end(), [](std::uint8_t p) { return p != 0; });
}

std::optional<std::int64_t> AggregateTensor::at(const IndexTuple& full) const {
  const auto fixed = resolve(schema_, full);
  if (fixed.size() != schema_.rank()) {
    throw UsageError("at() requires every dimension to be fixed");
  }
  const auto strides = detail::row_major_strides(schema_);
  std::size_t flat = 0;
  for (const auto& [axis, pos] : fixed) flat += strides[axis] * pos;
  if (!present_[flat]) return std::nullopt;
  return values_[flat];
}

}  // namespace schedlearn
