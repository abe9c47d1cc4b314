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

#include <limits>

#include "modobs/plant.hpp"
#include "modobs/transform.hpp"

namespace modobs {

/// Observer gain together with its Lyapunov certificate and the scalars the
/// convergence analysis produces. Immutable once assembled; the right-hand
/// side evaluations below are pure, so several simulations may share one
/// design concurrently.
struct ObserverDesign {
  int n = 0;
  Eigen::VectorXd gain;  // K
  Eigen::MatrixXd p;     // (A - K C)^T P + P (A - K C) = -Q
  Eigen::MatrixXd q;
  double varpi = std::numeric_limits<double>::quiet_NaN();  // margin [1/s]
  double kappa = std::numeric_limits<double>::quiet_NaN();  // bound [state^2]
  double t_a = std::numeric_limits<double>::infinity();     // recovery gate
  bool nonlinearity_aware = false;  // inject f/g evaluated at the estimate
};

/// Eigenvalues of A - K C (the injection error dynamics).
Eigen::VectorXcd error_dynamics_eigenvalues(int n, const Eigen::VectorXd& gain);

/// Solves (A - K C)^T P + P (A - K C) = -Q on the vectorized n^2 system and
/// returns the symmetric positive-definite P. Requires Q symmetric positive
/// definite. Throws UnstableDynamicsError when A - K C is not Hurwitz and
/// std::runtime_error when the linear solve degenerates or P fails the
/// definiteness check.
Eigen::MatrixXd lyapunov_solve(int n, const Eigen::VectorXd& gain,
                               const Eigen::MatrixXd& q);

/// Convergence margin
///
///   lambda_min(Q)/lambda_max(P)
///     - m0 lambda_max(P) (1 + mu_bound^2 + (gamma_f^2 + gamma_g^2)/lambda_max(P)),
///
/// where m0 is the sup of the modulating function and mu_bound the input
/// bound. The caller decides what a nonpositive value means.
double convergence_margin(const Eigen::MatrixXd& p, const Eigen::MatrixXd& q,
                          double m0, double input_bound, double gamma_f,
                          double gamma_g);

/// Recovery error bound
///
///   kappa = tau (lmax/lmin) |xihat(t0)|^2 exp(-varpi (t_a - t0))
///         + tau m0 (delta_f^2 + delta_g^2) / (varpi lmin) (1 - exp(-varpi (t_a - t0))),
///
/// with tau the squared-norm bound on T^{-1} past t_a (recovery_gain_bound)
/// and lmin/lmax the eigenvalue range of design.p. Zero exactly when the
/// observer starts at zero and the delta constants vanish. Throws
/// CertificateUnavailableError unless design.varpi > 0.
double recovery_error_bound(const ObserverDesign& design, double tau,
                            double xi_hat0_norm, double delta_f,
                            double delta_g, double m0, double t_a, double t0);

/// Transformed-state derivative
///
///   A xi + B(t) y + e_n mu(t) (f(z, u) + g(z) u),
///
/// where B is the output coupling of the transform and z is the original
/// state feeding the nonlinearity. Up to t_a the caller may supply z through
/// `reference_state` (the co-integrated plant state); otherwise, and always
/// past t_a, z is recovered by solve_transform, which throws below the mu
/// floor. At points where mu(t) is exactly zero the nonlinear term is zero
/// regardless, so no solve happens there.
Eigen::VectorXd transformed_rhs(
    const Eigen::VectorXd& xi, double t, double y, double u,
    const PlantModel& plant, const ModulatingTransform& tr,
    const Eigen::VectorXd* reference_state = nullptr,
    double t_a = std::numeric_limits<double>::infinity());

/// Observer derivative: the transformed drift plus the injection written as
/// K (mu(t) y - xihat_1). That form equals mu K (y - yhat) with
/// xihat_1 = mu yhat but never divides by mu, so it stays finite at the
/// start time for any finite estimate. The nonlinear term is included only
/// for nonlinearity-aware designs and evaluates f/g at the recovered
/// estimate, with the same singularity behaviour as transformed_rhs (no
/// reference is available to an observer).
Eigen::VectorXd observer_rhs(const Eigen::VectorXd& xi_hat, double t, double y,
                             double u, const ObserverDesign& design,
                             const ModulatingTransform& tr,
                             const PlantModel& plant);

/// State estimate: zero before t_a, T^{-1}(t) xi_hat from t_a on. The gate
/// keeps every solve away from the singular region.
Eigen::VectorXd recover_state(const Eigen::VectorXd& xi_hat, double t,
                              double t_a, const ModulatingTransform& tr);

}  // namespace modobs
