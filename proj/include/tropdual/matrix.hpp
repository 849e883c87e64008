// Copyright 2026 The tropdual Authors
//
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tropdual/semiring.hpp"

namespace tropdual {

/// Finite entry of a sparse tropical matrix.
struct MatrixEntry {
  std::size_t col;
  Rational value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Tropical matrix stored row-wise with infinity as the implicit default.
/// Row entries are kept sorted by column.
class TropMatrix {
 public:
  using Row = std::vector<MatrixEntry>;

  TropMatrix() = default;
  explicit TropMatrix(std::size_t cols) : cols_(cols) {}

  /// Builds from a dense table; infinite values are dropped.
  static TropMatrix dense(const std::vector<std::vector<TropValue>>& table) {
    TropMatrix m(table.empty() ? 0 : table.front().size());
    for (const auto& row : table) {
      if (row.size() != m.cols_) {
        throw DimensionMismatch("ragged dense matrix");
      }
      Row r;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c].is_finite()) r.push_back({c, row[c].value()});
      }
      m.rows_.push_back(std::move(r));
    }
    return m;
  }

  void add_row(Row row) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.col < b.col; });
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k].col >= cols_) {
        throw DimensionMismatch("column " + std::to_string(row[k].col) +
                                " out of range");
      }
      if (k && row[k].col == row[k - 1].col) {
        throw DimensionMismatch("duplicate column " +
                                std::to_string(row[k].col) + " in row");
      }
    }
    rows_.push_back(std::move(row));
  }

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const Row& row(std::size_t r) const { return rows_[r]; }

  [[nodiscard]] TropValue at(std::size_t r, std::size_t c) const {
    for (const auto& e : rows_[r]) {
      if (e.col == c) return e.value;
    }
    return TropValue::infinity();
  }

  friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

}  // namespace tropdual
