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

#ifndef SCHEDLEARN_TENSOR_HPP
#define SCHEDLEARN_TENSOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "schedlearn/schema.hpp"

namespace schedlearn {

// A dense rank-n binary tensor over a schema. Cells are stored in canonical
// order: lexicographic over the schema's dimension order with the last
// dimension varying fastest (plain row-major). Immutable after construction
// and safe to share across threads.
class ScheduleTensor {
 public:
  ScheduleTensor(DimensionSchema schema, std::vector<std::uint8_t> cells);

  static ScheduleTensor zeros(DimensionSchema schema);

  const DimensionSchema& schema() const { return schema_; }
  const std::vector<std::uint8_t>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  // Value of the fully addressed cell. `full` must fix every dimension.
  int cell(const IndexTuple& full) const;

  // Sub-tensor obtained by fixing the dimensions named in `fix` (a strict
  // subset of all dimensions; fixing everything is cell()'s job). The result
  // keeps the remaining dimensions in schema order, with their ordered flags.
  ScheduleTensor slice(const IndexTuple& fix) const;

  bool operator==(const ScheduleTensor&) const = default;

 private:
  DimensionSchema schema_;
  std::vector<std::uint8_t> cells_;
};

// The result of reducing a schedule tensor: non-negative integers over the
// retained dimensions. Cells can be absent (the MinCons* aggregations yield
// no value for a slice without a qualifying run).
class AggregateTensor {
 public:
  AggregateTensor(DimensionSchema schema, std::vector<std::int64_t> values);
  AggregateTensor(DimensionSchema schema, std::vector<std::int64_t> values,
                  std::vector<std::uint8_t> present);

  const DimensionSchema& schema() const { return schema_; }
  std::size_t size() const { return values_.size(); }

  bool present(std::size_t i) const { return present_[i] != 0; }
  std::int64_t value(std::size_t i) const { return values_[i]; }

  const std::vector<std::int64_t>& values() const { return values_; }
  const std::vector<std::uint8_t>& present_mask() const { return present_; }
  bool all_present() const;

  // Value addressed by labels; nullopt when the cell is absent.
  std::optional<std::int64_t> at(const IndexTuple& full) const;

  bool operator==(const AggregateTensor&) const = default;

 private:
  DimensionSchema schema_;
  std::vector<std::int64_t> values_;
  std::vector<std::uint8_t> present_;
};

}  // namespace schedlearn

#endif  // SCHEDLEARN_TENSOR_HPP
