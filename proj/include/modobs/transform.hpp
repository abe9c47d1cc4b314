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

#include <Eigen/Dense>

#include "modobs/alpha_table.hpp"
#include "modobs/modulating_function.hpp"

namespace modobs {

/// Lower-triangular time-varying state transformation T(t) built from a
/// modulating function and the alpha coefficient table: the (r, c) entry of
/// the n x n matrix is alpha(r+1, r-c) mu^(r-c)(t) for c <= r (0-based), so
/// every diagonal entry equals mu(t) and det T(t) = mu(t)^n. The matrix is
/// singular exactly at the start time, where the whole matrix vanishes
/// whenever the mu order is at least n.
///
/// Immutable after construction; all operations on it are pure and safe to
/// run concurrently at different times.
struct ModulatingTransform {
  int n = 0;
  AlphaTable alpha;
  ModulatingFunction mu;
  double mu_floor = 1e-12;  // singularity floor guarding solves
};

/// Builds the order-n transform. The drift-identity paths need derivatives
/// of mu through order n, so mf.order() >= n is required there; eval alone
/// works with order n-1. Throws std::invalid_argument for n < 1 or a
/// nonpositive floor.
ModulatingTransform make_transform(int n, const ModulatingFunction& mf,
                                   double mu_floor = 1e-12);

/// Dense T built from mu^(shift): entry (r, c) is
/// alpha(r+1, r-c) mu^(r-c+shift)(t). shift = 0 is the transformation
/// itself; shift = 1 is the matrix appearing in the drift identity.
Eigen::MatrixXd eval_transform(const ModulatingTransform& tr, double t,
                               int derivative_shift = 0);

/// Solves T(t) x = rhs by forward substitution on the triangular structure
/// (never through a general inverse). Throws SingularTransformError when
/// |mu(t)| < mu_floor.
Eigen::VectorXd solve_transform(const ModulatingTransform& tr, double t,
                                const Eigen::VectorXd& rhs);

/// Output-coupling vector B(t) satisfying
///
///   (T(mu') + T(mu) A) T(mu)^{-1} = A + B(t) e_1^T / mu(t),
///
/// with A the canonical shift matrix: the transformed drift is
/// A xi + B(t) y. Above the mu floor the vector is computed from the matrix
/// identity itself; at and below the floor its continuous extension (the
/// binomial form below, which the test suite cross-validates against the
/// identity) takes over.
Eigen::VectorXd output_coupling(const ModulatingTransform& tr, double t);

/// Binomial closed form of the output coupling: entry j (1-based) equals
/// (-1)^(j+1) C(n, j) mu^(j)(t). Kept as a separately evaluable route so the
/// two can be checked against each other.
Eigen::VectorXd output_coupling_binomial(int n, const ModulatingFunction& mf,
                                         double t);

/// Smallest activation time t_a with det T(t) = mu(t)^n > eps for all
/// t >= t_a. Exponential family: closed form
/// t0 - ln(1 - eps^(1/(n m))); other families fall back to bisection.
/// Throws std::invalid_argument unless 0 < eps < 1.
double activation_time(int n, const ModulatingFunction& mf, double eps);

/// Bisection on the monotone map t -> mu(t)^n, usable for any family;
/// agrees with the closed form to 1e-9 on the exponential family.
double activation_time_bisect(int n, const ModulatingFunction& mf, double eps);

/// Estimate of tau = max over t >= t_a of the squared spectral norm of
/// T^{-1}(t), sampled on a grid that is densest just after t_a: mu is
/// increasing, so the supremum sits at the left end of the window.
double recovery_gain_bound(const ModulatingTransform& tr, double t_a,
                           double horizon = 50.0, int samples = 2000);

}  // namespace modobs
