// Copyright 2026 The modobs Authors
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

#include <cstdint>
#include <vector>

namespace modobs {

/// Signed integer coefficient table alpha(j, i), rows j = 1..n, entries
/// i = 0..j-1, generated by
///
///   alpha(j, 0) = 1                          for every row,
///   alpha(n, i) = (-1)^i                     (anchor row),
///   alpha(j, i) = alpha(j+1, i) - alpha(j, i-1)   for j < n.
///
/// Row j supplies the weights of row j of the order-n triangular
/// transformation. The table is anchored at its last row, so two tables of
/// different order agree only after the row shift applied by extended().
/// Entries satisfy alpha(j, i) = (-1)^i C(n - j + i, i).
class AlphaTable {
 public:
  /// Full table of the given order. Throws std::invalid_argument for
  /// order < 1.
  explicit AlphaTable(int order);

  int order() const { return order_; }

  /// alpha(j, i) with the row index j 1-based and i in [0, j-1].
  /// Throws std::out_of_range outside the triangle.
  std::int64_t at(int j, int i) const;

  /// Order n+1 table. Only the new outermost diagonal is computed; all other
  /// entries carry over from this table shifted down by one row.
  AlphaTable extended() const;

  bool operator==(const AlphaTable& other) const {
    return order_ == other.order_ && rows_ == other.rows_;
  }

 private:
  AlphaTable() = default;

  int order_ = 0;
  std::vector<std::vector<std::int64_t>> rows_;  // rows_[j-1][i]
};

}  // namespace modobs
