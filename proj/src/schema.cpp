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

#include "schedlearn/schema.hpp"

#include <algorithm>
#include <unordered_set>

#include "schedlearn/errors.hpp"
#include "indexing.hpp"

namespace schedlearn {

DimensionSchema::DimensionSchema(std::vector<Dimension> dims) : dims_(std::move(dims)) {
  std::unordered_set<std::string_view> names;
  for (const auto& d : dims_) {
    if (!names.insert(d.name).second) {
      throw SchemaError("duplicate dimension name '" + d.name + "'");
    }
    if (d.values.empty()) {
      throw SchemaError("dimension '" + d.name + "' has no values");
    }
    std::unordered_set<std::string_view> labels;
    for (const auto& v : d.values) {
      if (!labels.insert(v).second) {
        throw SchemaError("duplicate value label '" + v + "' in dimension '" + d.name + "'");
      }
    }
  }
}

std::size_t DimensionSchema::cell_count() const {
  std::size_t n = 1;
  for (const auto& d : dims_) n *= d.values.size();
  return n;
}

std::optional<std::size_t> DimensionSchema::find_axis(std::string_view name) const {
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    if (dims_[a].name == name) return a;
  }
  return std::nullopt;
}

std::size_t DimensionSchema::axis(std::string_view name) const {
  if (auto a = find_axis(name)) return *a;
  throw SchemaError("unknown dimension '" + std::string(name) + "'");
}

std::size_t DimensionSchema::value_index(std::size_t axis, std::string_view label) const {
  const Dimension& d = dims_.at(axis);
  auto it = std::find(d.values.begin(), d.values.end(), label);
  if (it == d.values.end()) {
    throw SchemaError("unknown value '" + std::string(label) + "' in dimension '" + d.name +
                      "'");
  }
  return static_cast<std::size_t>(it - d.values.begin());
}

bool DimensionSchema::same_shape(const DimensionSchema& other) const {
  if (dims_.size() != other.dims_.size()) return false;
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    if (dims_[a].name != other.dims_[a].name) return false;
    if (dims_[a].values.size() != other.dims_[a].values.size()) return false;
    if (dims_[a].ordered != other.dims_[a].ordered) return false;
  }
  return true;
}

std::vector<IndexTuple> enumerate_product(const DimensionSchema& schema,
                                          const std::vector<std::string>& dims) {
  if (dims.empty()) {
    throw UsageError("enumerate_product: dimension set must not be empty");
  }
  const auto axes = detail::axes_of(schema, dims, "enumerate_product");

  std::size_t total = 1;
  for (auto a : axes) total *= schema.size(a);

  std::vector<IndexTuple> out;
  out.reserve(total);
  std::vector<std::size_t> coord(axes.size(), 0);
  for (std::size_t i = 0; i < total; ++i) {
    IndexTuple tuple;
    for (std::size_t k = 0; k < axes.size(); ++k) {
      const Dimension& d = schema.dim(axes[k]);
      tuple.emplace(d.name, d.values[coord[k]]);
    }
    out.push_back(std::move(tuple));
    for (std::size_t k = axes.size(); k-- > 0;) {
      if (++coord[k] < schema.size(axes[k])) break;
      coord[k] = 0;
    }
  }
  return out;
}

}  // namespace schedlearn
