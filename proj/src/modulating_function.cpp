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

#include "modobs/modulating_function.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace modobs {

namespace {

// k^j as an exact double (k, j small; the result stays far below 2^53).
double int_pow(int k, int j) {
  double r = 1.0;
  for (int i = 0; i < j; ++i) r *= static_cast<double>(k);
  return r;
}

}  // namespace

ModulatingFunction::ModulatingFunction(MuFamily family, int order,
                                       double start_time)
    : family_(family), order_(order), start_time_(start_time) {
  binomial_.assign(static_cast<std::size_t>(order_) + 1, 1.0);
  for (int k = 1; k <= order_; ++k) {
    // C(m, k) = C(m, k-1) * (m - k + 1) / k, exact for small m.
    binomial_[static_cast<std::size_t>(k)] =
        binomial_[static_cast<std::size_t>(k - 1)] *
        static_cast<double>(order_ - k + 1) / static_cast<double>(k);
  }
  bounds_.assign(static_cast<std::size_t>(order_) + 1, 0.0);
  for (int j = 0; j <= order_; ++j) {
    double m = 0.0;
    for (int k = 0; k <= order_; ++k) {
      m += binomial_[static_cast<std::size_t>(k)] * int_pow(k, j);
    }
    bounds_[static_cast<std::size_t>(j)] = m;
  }
}

ModulatingFunction ModulatingFunction::exponential(int order,
                                                   double start_time) {
  if (order < 1) {
    throw std::invalid_argument("modulating function order must be >= 1, got " +
                                std::to_string(order));
  }
  return ModulatingFunction(MuFamily::exponential, order, start_time);
}

double ModulatingFunction::derivative(int j, double t) const {
  if (j < 0 || j > order_) {
    throw std::domain_error("derivative order " + std::to_string(j) +
                            " outside [0, " + std::to_string(order_) + "]");
  }
  if (t < start_time_) {
    throw std::domain_error("time " + std::to_string(t) +
                            " before start time " + std::to_string(start_time_));
  }
  const double s = t - start_time_;
  double acc = 0.0;
  const int k_begin = (j == 0) ? 0 : 1;  // the k = 0 term vanishes for j >= 1
  for (int k = k_begin; k <= order_; ++k) {
    const double sign = ((k + j) % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binomial_[static_cast<std::size_t>(k)] * int_pow(k, j) *
           std::exp(-static_cast<double>(k) * s);
  }
  return acc;
}

double ModulatingFunction::derivative_bound(int j) const {
  if (j < 0 || j > order_) {
    throw std::domain_error("derivative order " + std::to_string(j) +
                            " outside [0, " + std::to_string(order_) + "]");
  }
  return bounds_[static_cast<std::size_t>(j)];
}

MuValidationReport validate(const ModulatingFunction& mf,
                            const std::vector<double>& grid, double zero_tol) {
  if (grid.empty()) {
    throw std::invalid_argument("validation grid is empty");
  }
  for (double t : grid) {
    if (t < mf.start_time()) {
      throw std::invalid_argument("validation grid point " + std::to_string(t) +
                                  " before start time");
    }
  }

  MuValidationReport report;
  const int m = mf.order();

  // Vanishing at the start time, orders 0..m-1.
  double start_residual = 0.0;
  for (int j = 0; j < m; ++j) {
    start_residual =
        std::max(start_residual, std::abs(mf.derivative(j, mf.start_time())));
  }
  report.max_start_residual = start_residual;
  report.vanishes_at_start = start_residual <= 1e-12;

  // Nonvanishing derivatives after the start time, and boundedness.
  double max_excess = 0.0;
  for (double t : grid) {
    for (int j = 0; j <= m; ++j) {
      const double v = mf.derivative(j, t);
      if (t > mf.start_time() && std::abs(v) <= zero_tol) {
        report.zero_flags.push_back(MuZeroFlag{j, t, v});
      }
      const double bound = mf.derivative_bound(j);
      max_excess = std::max(max_excess, (std::abs(v) - bound) / bound);
    }
  }
  report.max_relative_bound_excess = std::max(0.0, max_excess);
  report.bounded = max_excess <= 1e-12;

  return report;
}

}  // namespace modobs
