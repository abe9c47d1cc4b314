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

#include "modobs/observer.hpp"

#include <cmath>
#include <stdexcept>

#include "modobs/canonical_form.hpp"
#include "modobs/errors.hpp"

namespace modobs {

namespace {

Eigen::MatrixXd closed_loop(int n, const Eigen::VectorXd& gain) {
  if (n < 1) throw std::invalid_argument("order must be >= 1");
  if (gain.size() != n) throw std::invalid_argument("gain dimension mismatch");
  return brunovsky_a(n) - gain * brunovsky_c(n);
}

void check_spd(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + " must be square");
  }
  if ((m - m.transpose()).cwiseAbs().maxCoeff() >
      1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument(std::string(what) + " must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw std::invalid_argument(std::string(what) + " must be positive definite");
  }
}

// Eigenvalue range of a symmetric matrix.
std::pair<double, double> eig_range(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

}  // namespace

Eigen::VectorXcd error_dynamics_eigenvalues(int n, const Eigen::VectorXd& gain) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(closed_loop(n, gain));
  return es.eigenvalues();
}

Eigen::MatrixXd lyapunov_solve(int n, const Eigen::VectorXd& gain,
                               const Eigen::MatrixXd& q) {
  check_spd(q, "Q");
  if (q.rows() != n) throw std::invalid_argument("Q dimension mismatch");

  const Eigen::MatrixXd f = closed_loop(n, gain);
  {
    Eigen::EigenSolver<Eigen::MatrixXd> es(f);
    if (es.eigenvalues().real().maxCoeff() >= 0.0) {
      throw UnstableDynamicsError("unstable error dynamics: A - K C is not Hurwitz");
    }
  }

  // vec(F^T P + P F) = (I (x) F^T + F^T (x) I) vec(P), column-major vec.
  const Eigen::MatrixXd ft = f.transpose();
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(n * n, n * n);
  for (int col_block = 0; col_block < n; ++col_block) {
    system.block(col_block * n, col_block * n, n, n) += ft;  // I (x) F^T
    for (int row_block = 0; row_block < n; ++row_block) {
      system.block(row_block * n, col_block * n, n, n) +=
          ft(row_block, col_block) * Eigen::MatrixXd::Identity(n, n);
    }
  }

  Eigen::VectorXd rhs(n * n);
  for (int c = 0; c < n; ++c) rhs.segment(c * n, n) = -q.col(c);

  const Eigen::VectorXd vec_p = system.partialPivLu().solve(rhs);
  if ((system * vec_p - rhs).norm() > 1e-8 * rhs.norm()) {
    throw std::runtime_error("Lyapunov system solve degenerated");
  }

  Eigen::MatrixXd p(n, n);
  for (int c = 0; c < n; ++c) p.col(c) = vec_p.segment(c * n, n);
  p = 0.5 * (p + p.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw std::runtime_error("Lyapunov solution is not positive definite");
  }
  return p;
}

double convergence_margin(const Eigen::MatrixXd& p, const Eigen::MatrixXd& q,
                          double m0, double input_bound, double gamma_f,
                          double gamma_g) {
  check_spd(p, "P");
  check_spd(q, "Q");
  const double lmax_p = eig_range(p).second;
  const double lmin_q = eig_range(q).first;
  return lmin_q / lmax_p -
         m0 * lmax_p *
             (1.0 + input_bound * input_bound +
              (gamma_f * gamma_f + gamma_g * gamma_g) / lmax_p);
}

double recovery_error_bound(const ObserverDesign& design, double tau,
                            double xi_hat0_norm, double delta_f,
                            double delta_g, double m0, double t_a, double t0) {
  if (!(design.varpi > 0.0)) {
    throw CertificateUnavailableError(
        "certificate unavailable: convergence margin is not positive");
  }
  const auto [lmin, lmax] = eig_range(design.p);
  const double decay = std::exp(-design.varpi * (t_a - t0));
  const double initial_term =
      tau * (lmax / lmin) * xi_hat0_norm * xi_hat0_norm * decay;
  const double mismatch_term =
      tau * m0 * (delta_f * delta_f + delta_g * delta_g) /
      (design.varpi * lmin) * (1.0 - decay);
  return initial_term + mismatch_term;
}

namespace {

// Shared nonlinear term e_n mu(t) (f + g u). `reference` may be null.
double nonlinear_term(const Eigen::VectorXd& xi, double t, double u,
                      const PlantModel& plant, const ModulatingTransform& tr,
                      const Eigen::VectorXd* reference, double t_a) {
  if (!plant.has_nonlinearity()) return 0.0;
  const double w = tr.mu.value(t);
  if (w == 0.0) return 0.0;  // exact zero weight, nothing to evaluate
  Eigen::VectorXd z;
  if (reference != nullptr && t <= t_a) {
    z = *reference;
  } else {
    z = solve_transform(tr, t, xi);
  }
  return w * plant.nonlinearity(z, u);
}

}  // namespace

Eigen::VectorXd transformed_rhs(const Eigen::VectorXd& xi, double t, double y,
                                double u, const PlantModel& plant,
                                const ModulatingTransform& tr,
                                const Eigen::VectorXd* reference_state,
                                double t_a) {
  if (xi.size() != tr.n) throw std::invalid_argument("state dimension mismatch");
  Eigen::VectorXd dxi = shift_up(xi) + output_coupling(tr, t) * y;
  dxi(tr.n - 1) += nonlinear_term(xi, t, u, plant, tr, reference_state, t_a);
  return dxi;
}

Eigen::VectorXd observer_rhs(const Eigen::VectorXd& xi_hat, double t, double y,
                             double u, const ObserverDesign& design,
                             const ModulatingTransform& tr,
                             const PlantModel& plant) {
  if (xi_hat.size() != tr.n) {
    throw std::invalid_argument("state dimension mismatch");
  }
  Eigen::VectorXd dxi = shift_up(xi_hat) + output_coupling(tr, t) * y;
  if (design.nonlinearity_aware) {
    dxi(tr.n - 1) += nonlinear_term(xi_hat, t, u, plant, tr, nullptr,
                                    -std::numeric_limits<double>::infinity());
  }
  const double innovation = tr.mu.value(t) * y - xi_hat(0);
  dxi += design.gain * innovation;
  return dxi;
}

Eigen::VectorXd recover_state(const Eigen::VectorXd& xi_hat, double t,
                              double t_a, const ModulatingTransform& tr) {
  if (t < t_a) return Eigen::VectorXd::Zero(tr.n);
  return solve_transform(tr, t, xi_hat);
}

}  // namespace modobs
