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

#ifndef SCHEDLEARN_SCHEMA_HPP
#define SCHEDLEARN_SCHEMA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schedlearn {

// One axis of a schedule: a name, the labels of its values, and whether the
// values carry a meaningful order (days do, interchangeable employees don't).
struct Dimension {
  std::string name;
  std::vector<std::string> values;
  bool ordered = false;

  bool operator==(const Dimension&) const = default;
};

// An ordered list of dimensions. Immutable after construction; all lookups
// are validated. A rank-0 schema is allowed and describes a scalar (it shows
// up as the result of reducing every dimension away).
class DimensionSchema {
 public:
  DimensionSchema() = default;
  explicit DimensionSchema(std::vector<Dimension> dims);

  const std::vector<Dimension>& dims() const { return dims_; }
  std::size_t rank() const { return dims_.size(); }
  const Dimension& dim(std::size_t axis) const { return dims_.at(axis); }
  std::size_t size(std::size_t axis) const { return dims_.at(axis).values.size(); }

  // Product of all dimension sizes (1 for a rank-0 schema).
  std::size_t cell_count() const;

  std::optional<std::size_t> find_axis(std::string_view name) const;

  // Like find_axis but throws SchemaError for unknown names.
  std::size_t axis(std::string_view name) const;

  // Position of `label` within the given axis; throws SchemaError.
  std::size_t value_index(std::size_t axis, std::string_view label) const;

  // True when the other schema has the same dimension names, sizes and
  // ordered flags, in the same order. Value labels are free to differ, so a
  // model learned on one week's days applies to the next week's.
  bool same_shape(const DimensionSchema& other) const;

  bool operator==(const DimensionSchema&) const = default;

 private:
  std::vector<Dimension> dims_;
};

// A partial assignment of dimensions to value labels, e.g.
// {Nurses: Nurse2, Days: Day1}.
using IndexTuple = std::map<std::string, std::string>;

// Every combination of values of the named dimensions, in canonical order:
// dimensions are taken in schema order and the last one varies fastest.
std::vector<IndexTuple> enumerate_product(const DimensionSchema& schema,
                                          const std::vector<std::string>& dims);

}  // namespace schedlearn

#endif  // SCHEDLEARN_SCHEMA_HPP
