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

#include "modobs/alpha_table.hpp"

#include <stdexcept>
#include <string>

namespace modobs {

AlphaTable::AlphaTable(int order) : order_(order) {
  if (order < 1) {
    throw std::invalid_argument("alpha table order must be >= 1, got " +
                                std::to_string(order));
  }
  rows_.resize(static_cast<std::size_t>(order));
  for (int j = 1; j <= order; ++j) {
    rows_[static_cast<std::size_t>(j - 1)].assign(static_cast<std::size_t>(j),
                                                  0);
  }
  // Anchor row n, then fill upward; each row needs the one below it.
  for (int i = 0; i < order; ++i) {
    rows_[static_cast<std::size_t>(order - 1)][static_cast<std::size_t>(i)] =
        (i % 2 == 0) ? 1 : -1;
  }
  for (int j = order - 1; j >= 1; --j) {
    auto& row = rows_[static_cast<std::size_t>(j - 1)];
    const auto& below = rows_[static_cast<std::size_t>(j)];
    row[0] = 1;
    for (int i = 1; i <= j - 1; ++i) {
      row[static_cast<std::size_t>(i)] =
          below[static_cast<std::size_t>(i)] - row[static_cast<std::size_t>(i - 1)];
    }
  }
}

std::int64_t AlphaTable::at(int j, int i) const {
  if (j < 1 || j > order_ || i < 0 || i > j - 1) {
    throw std::out_of_range("alpha(" + std::to_string(j) + ", " +
                            std::to_string(i) + ") outside order-" +
                            std::to_string(order_) + " table");
  }
  return rows_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)];
}

AlphaTable AlphaTable::extended() const {
  AlphaTable out;
  out.order_ = order_ + 1;
  out.rows_.resize(static_cast<std::size_t>(out.order_));
  out.rows_[0] = {1};
  for (int j = 2; j <= out.order_; ++j) {
    auto& row = out.rows_[static_cast<std::size_t>(j - 1)];
    row.assign(static_cast<std::size_t>(j), 0);
    // Entries up to i = j-2 carry over from the old row j-1.
    const auto& old_row = rows_[static_cast<std::size_t>(j - 2)];
    for (int i = 0; i <= j - 2; ++i) {
      row[static_cast<std::size_t>(i)] = old_row[static_cast<std::size_t>(i)];
    }
  }
  // New outermost diagonal: anchor the last row, then walk upward with the
  // defining recurrence alpha(j, j-1) = alpha(j+1, j-1) - alpha(j, j-2).
  out.rows_[static_cast<std::size_t>(out.order_ - 1)]
           [static_cast<std::size_t>(out.order_ - 1)] =
      (out.order_ % 2 == 1) ? 1 : -1;
  for (int j = out.order_ - 1; j >= 2; --j) {
    auto& row = out.rows_[static_cast<std::size_t>(j - 1)];
    const auto& below = out.rows_[static_cast<std::size_t>(j)];
    row[static_cast<std::size_t>(j - 1)] =
        below[static_cast<std::size_t>(j - 1)] - row[static_cast<std::size_t>(j - 2)];
  }
  return out;
}

}  // namespace modobs
