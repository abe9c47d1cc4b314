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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "modobs/modulating_function.hpp"
#include "oracle_helpers.hpp"

using modobs::ModulatingFunction;
using modobs::MuValidationReport;
using modobs::validate;
using modobs::testing::central_diff;
using modobs::testing::UniformDraw;

TEST_CASE("value and first derivatives at the start time vanish") {
  const auto mf = ModulatingFunction::exponential(2, 0.0);
  CHECK(mf.derivative(0, 0.0) == 0.0);
  CHECK(mf.derivative(1, 0.0) == 0.0);
  // One derivative order higher does not vanish: mu''(0) = 2 for m = 2.
  CHECK(mf.derivative(2, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("mu'(ln 2) = 1/2 for the order-2 family, against a value-only "
          "finite difference") {
  const auto mf = ModulatingFunction::exponential(2, 0.0);
  const double t = std::log(2.0);
  CHECK(mf.derivative(1, t) == doctest::Approx(0.5).epsilon(1e-12));
  const double fd = central_diff(
      [&](double s) { return std::pow(1.0 - std::exp(-s), 2.0); }, t, 1e-6);
  CHECK(mf.derivative(1, t) == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("closed-form derivatives match finite differences of the "
          "next-lower order") {
  UniformDraw draw(20260811);
  for (int m : {1, 2, 3, 5}) {
    const double t0 = (m == 3) ? 1.5 : 0.0;
    const auto mf = ModulatingFunction::exponential(m, t0);
    for (int trial = 0; trial < 50; ++trial) {
      const double t = draw(t0 + 0.1, t0 + 10.0);
      for (int j = 1; j <= m; ++j) {
        const double fd = central_diff(
            [&](double s) { return mf.derivative(j - 1, s); }, t, 1e-5);
        const double exact = mf.derivative(j, t);
        CHECK(std::abs(exact - fd) <=
              1e-6 * std::max(1.0, std::abs(exact)));
      }
    }
  }
}

TEST_CASE("vanishing start conditions hold through order m-1 for m <= 8") {
  for (int m = 1; m <= 8; ++m) {
    const auto mf = ModulatingFunction::exponential(m, 0.25);
    for (int j = 0; j < m; ++j) {
      CHECK(std::abs(mf.derivative(j, 0.25)) <= 1e-12);
    }
  }
}

TEST_CASE("long-time limits: mu -> 1 and every derivative -> 0") {
  for (int m : {1, 2, 4}) {
    const auto mf = ModulatingFunction::exponential(m, 0.0);
    const double t = 40.0;
    CHECK(std::abs(mf.value(t) - 1.0) <= 1e-15);
    for (int j = 1; j <= m; ++j) {
      CHECK(std::abs(mf.derivative(j, t)) <= 1e-15);
    }
  }
}

TEST_CASE("mu stays in [0, 1) and increases strictly before saturation") {
  const auto mf = ModulatingFunction::exponential(3, 0.0);
  double prev = -1.0;
  for (int k = 0; k <= 200; ++k) {
    const double t = 0.1 * k;
    const double v = mf.value(t);
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("derivatives respect the binomial bounds") {
  UniformDraw draw(7);
  for (int m : {2, 4}) {
    const auto mf = ModulatingFunction::exponential(m, 0.0);
    for (int trial = 0; trial < 100; ++trial) {
      const double t = draw(0.0, 20.0);
      for (int j = 0; j <= m; ++j) {
        CHECK(std::abs(mf.derivative(j, t)) <= mf.derivative_bound(j));
      }
    }
  }
}

TEST_CASE("domain errors") {
  const auto mf = ModulatingFunction::exponential(2, 0.0);
  CHECK_THROWS_AS(mf.derivative(3, 1.0), std::domain_error);
  CHECK_THROWS_AS(mf.derivative(-1, 1.0), std::domain_error);
  CHECK_THROWS_AS(mf.derivative(0, -0.5), std::domain_error);
  CHECK_THROWS_AS(ModulatingFunction::exponential(0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("validation passes on a grid avoiding the mu'' zero") {
  const auto mf = ModulatingFunction::exponential(2, 0.0);
  std::vector<double> grid;
  for (int k = 0; k <= 100; ++k) grid.push_back(0.1 * k);
  const MuValidationReport report = validate(mf, grid);
  CHECK(report.passed());
  CHECK(report.vanishes_at_start);
  CHECK(report.bounded);
  CHECK(report.zero_flags.empty());
}

TEST_CASE("validation flags the isolated mu'' zero at ln 2") {
  const auto mf = ModulatingFunction::exponential(2, 0.0);
  std::vector<double> grid = {0.2, std::log(2.0), 1.1, 3.0};
  const MuValidationReport report = validate(mf, grid);
  CHECK(report.passed());  // flags are informational
  REQUIRE(report.zero_flags.size() == 1);
  CHECK(report.zero_flags[0].derivative_order == 2);
  CHECK(report.zero_flags[0].t == doctest::Approx(std::log(2.0)));
}

TEST_CASE("single-factor family at t = 1") {
  const auto mf = ModulatingFunction::exponential(1, 0.0);
  const MuValidationReport report = validate(mf, {1.0});
  CHECK(report.passed());
  CHECK(report.zero_flags.empty());
  CHECK(mf.value(1.0) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("validation argument errors") {
  const auto mf = ModulatingFunction::exponential(2, 0.0);
  CHECK_THROWS_AS(validate(mf, {}), std::invalid_argument);
  CHECK_THROWS_AS(validate(mf, {-1.0}), std::invalid_argument);
}
