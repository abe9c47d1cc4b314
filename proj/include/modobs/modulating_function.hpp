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

#include <vector>

namespace modobs {

enum class MuFamily { exponential };

/// Smooth scalar weight mu(t) that vanishes together with its first m-1
/// derivatives at the start time t0, rises monotonically and stays bounded.
/// The built-in exponential family is
///
///   mu(t) = (1 - exp(-(t - t0)))^m,
///
/// whose j-th derivative has the exact binomial expansion
///
///   mu^(j)(t) = sum_{k=0..m} C(m,k) (-1)^(k+j) k^j exp(-k (t - t0)).
///
/// Derivatives are evaluated through that expansion rather than by automatic
/// or numeric differentiation, so repeated evaluations are bit-stable. New
/// families can be added behind the same derivative contract.
///
/// Instances are immutable after construction and safe to share across
/// threads; every member function is const and pure.
class ModulatingFunction {
 public:
  /// Exponential family of the given order. Throws std::invalid_argument
  /// for order < 1.
  static ModulatingFunction exponential(int order, double start_time);

  int order() const { return order_; }
  double start_time() const { return start_time_; }
  MuFamily family() const { return family_; }

  /// j-th derivative at t; j = 0 is the value itself. Throws
  /// std::domain_error for j outside [0, order] or t < start_time.
  double derivative(int j, double t) const;

  double value(double t) const { return derivative(0, t); }

  /// Bound M_j with |mu^(j)(t)| <= M_j for all t >= t0. For the exponential
  /// family this is the triangle-inequality bound sum_k C(m,k) k^j, which is
  /// loose for j = 0 (2^m instead of 1).
  double derivative_bound(int j) const;

  /// sup_t |mu(t)|, the tight value bound: 1 for the exponential family.
  /// This is the constant the convergence-margin formula consumes.
  double sup_value() const { return 1.0; }

 private:
  ModulatingFunction(MuFamily family, int order, double start_time);

  MuFamily family_;
  int order_;
  double start_time_;
  std::vector<double> binomial_;  // C(m, k), k = 0..m
  std::vector<double> bounds_;    // M_j, j = 0..m
};

/// A grid point at which some derivative is (numerically) zero after the
/// start time.
struct MuZeroFlag {
  int derivative_order = 0;
  double t = 0.0;
  double value = 0.0;
};

/// Outcome of checking the defining properties on a time grid.
///
/// Zero-valued derivatives after t0 are recorded as informational flags, not
/// failures: only mu(t) itself must stay nonzero for the transformation to
/// remain invertible, and the exponential family of order 2 already has an
/// isolated zero of mu'' at t0 + ln 2.
struct MuValidationReport {
  bool vanishes_at_start = false;  // mu^(j)(t0) = 0 for j = 0..m-1
  double max_start_residual = 0.0;
  bool bounded = false;  // |mu^(j)(t)| <= M_j on the grid for j = 0..m
  double max_relative_bound_excess = 0.0;
  std::vector<MuZeroFlag> zero_flags;

  bool passed() const { return vanishes_at_start && bounded; }
};

/// Checks the defining properties of mf on the given grid. Derivatives are
/// scanned through order m (not m-1) because the transformation machinery
/// consumes all of them. Throws std::invalid_argument on an empty grid or a
/// grid point before the start time.
MuValidationReport validate(const ModulatingFunction& mf,
                            const std::vector<double>& grid,
                            double zero_tol = 1e-9);

}  // namespace modobs
