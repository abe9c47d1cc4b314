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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "modobs/alpha_table.hpp"
#include "oracle_helpers.hpp"

using modobs::AlphaTable;
using modobs::testing::binomial;

TEST_CASE("order 2 entries") {
  const AlphaTable t(2);
  CHECK(t.at(1, 0) == 1);
  CHECK(t.at(2, 0) == 1);
  CHECK(t.at(2, 1) == -1);
}

TEST_CASE("order 3 anchor row") {
  const AlphaTable t(3);
  CHECK(t.at(3, 0) == 1);
  CHECK(t.at(3, 1) == -1);
  CHECK(t.at(3, 2) == 1);
}

TEST_CASE("order 4 second-row entry from the next-to-anchor identity") {
  const AlphaTable t(4);
  CHECK(t.at(3, 1) == -2);
}

TEST_CASE("defining relations hold through order 10") {
  for (int n = 1; n <= 10; ++n) {
    const AlphaTable t(n);
    for (int j = 1; j <= n; ++j) {
      CHECK(t.at(j, 0) == 1);
    }
    for (int i = 0; i < n; ++i) {
      CHECK(t.at(n, i) == ((i % 2 == 0) ? 1 : -1));
    }
    for (int j = 1; j <= n - 1; ++j) {
      for (int i = 1; i <= j - 1; ++i) {
        CHECK(t.at(j, i) == t.at(j + 1, i) - t.at(j, i - 1));
      }
    }
  }
}

TEST_CASE("derived row identities") {
  for (int n = 3; n <= 10; ++n) {
    const AlphaTable t(n);
    for (int i = 0; i <= n - 2; ++i) {
      const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
      CHECK(t.at(n - 1, i) == sign * (i + 1));
    }
    for (int i = 0; i <= n - 3; ++i) {
      const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
      CHECK(t.at(n - 2, i) == sign * (i + 1) * (i + 2) / 2);
    }
  }
}

TEST_CASE("every entry matches the binomial closed form") {
  for (int n = 1; n <= 10; ++n) {
    const AlphaTable t(n);
    for (int j = 1; j <= n; ++j) {
      for (int i = 0; i <= j - 1; ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        CHECK(static_cast<double>(t.at(j, i)) ==
              sign * binomial(n - j + i, i));
      }
    }
  }
}

TEST_CASE("extension agrees with direct construction entrywise") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(AlphaTable(n).extended() == AlphaTable(n + 1));
  }
}

TEST_CASE("smallest extension step") {
  const AlphaTable t = AlphaTable(1).extended();
  CHECK(t.order() == 2);
  CHECK(t.at(2, 1) == -1);
}

TEST_CASE("two extensions compose") {
  CHECK(AlphaTable(2).extended().extended() == AlphaTable(4));
}

TEST_CASE("argument and range errors") {
  CHECK_THROWS_AS(AlphaTable(0), std::invalid_argument);
  const AlphaTable t(3);
  CHECK_THROWS_AS(t.at(4, 0), std::out_of_range);
  CHECK_THROWS_AS(t.at(2, 2), std::out_of_range);
  CHECK_THROWS_AS(t.at(0, 0), std::out_of_range);
}
