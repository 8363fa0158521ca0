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

// Internal index math shared by the library sources; not installed.

#ifndef SCHEDLEARN_SRC_INDEXING_HPP
#define SCHEDLEARN_SRC_INDEXING_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "schedlearn/errors.hpp"
#include "schedlearn/schema.hpp"

namespace schedlearn::detail {

// Row-major strides: stride[last] == 1.
inline std::vector<std::size_t> row_major_strides(const DimensionSchema& s) {
  std::vector<std::size_t> strides(s.rank(), 1);
  for (std::size_t a = s.rank(); a-- > 1;) {
    strides[a - 1] = strides[a] * s.size(a);
  }
  return strides;
}

// Axes of the named dimensions, ascending. Throws SchemaError for unknown
// names and UsageError for duplicates.
inline std::vector<std::size_t> axes_of(const DimensionSchema& schema,
                                        const std::vector<std::string>& names,
                                        const char* what) {
  std::vector<std::size_t> axes;
  axes.reserve(names.size());
  for (const auto& name : names) {
    axes.push_back(schema.axis(name));
  }
  std::sort(axes.begin(), axes.end());
  if (std::adjacent_find(axes.begin(), axes.end()) != axes.end()) {
    throw UsageError(std::string(what) + ": duplicate dimension name");
  }
  return axes;
}

// Walks every cell of `schema` in canonical order while tracking the flat
// index of a reduced tensor. `contrib[a]` is the reduced-space stride of axis
// a, or 0 when the axis is reduced away. Visit(flat_in, flat_out) runs once
// per cell.
template <class Visit>
void for_each_cell(const DimensionSchema& schema, const std::vector<std::size_t>& contrib,
                   Visit&& visit) {
  const std::size_t rank = schema.rank();
  const std::size_t n = schema.cell_count();
  if (rank == 0) {
    visit(std::size_t{0}, std::size_t{0});
    return;
  }
  std::vector<std::size_t> coord(rank, 0);
  std::size_t out = 0;
  for (std::size_t flat = 0;;) {
    visit(flat, out);
    if (++flat == n) break;
    for (std::size_t a = rank; a-- > 0;) {
      ++coord[a];
      out += contrib[a];
      if (coord[a] < schema.size(a)) break;
      out -= contrib[a] * schema.size(a);
      coord[a] = 0;
    }
  }
}

}  // namespace schedlearn::detail

#endif  // SCHEDLEARN_SRC_INDEXING_HPP
