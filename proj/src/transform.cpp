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

#include "modobs/transform.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "modobs/canonical_form.hpp"
#include "modobs/errors.hpp"

namespace modobs {

ModulatingTransform make_transform(int n, const ModulatingFunction& mf,
                                   double mu_floor) {
  if (n < 1) {
    throw std::invalid_argument("transform order must be >= 1, got " +
                                std::to_string(n));
  }
  if (!(mu_floor > 0.0)) {
    throw std::invalid_argument("mu floor must be positive");
  }
  return ModulatingTransform{n, AlphaTable(n), mf, mu_floor};
}

Eigen::MatrixXd eval_transform(const ModulatingTransform& tr, double t,
                               int derivative_shift) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(tr.n, tr.n);
  for (int r = 0; r < tr.n; ++r) {
    for (int c = 0; c <= r; ++c) {
      m(r, c) = static_cast<double>(tr.alpha.at(r + 1, r - c)) *
                tr.mu.derivative(r - c + derivative_shift, t);
    }
  }
  return m;
}

Eigen::VectorXd solve_transform(const ModulatingTransform& tr, double t,
                                const Eigen::VectorXd& rhs) {
  if (rhs.size() != tr.n) {
    throw std::invalid_argument("rhs dimension mismatch");
  }
  const double mu = tr.mu.value(t);
  if (std::abs(mu) < tr.mu_floor) {
    throw SingularTransformError(t, mu);
  }
  // Forward substitution; every diagonal entry is mu(t).
  Eigen::VectorXd x(tr.n);
  for (int r = 0; r < tr.n; ++r) {
    double acc = rhs(r);
    for (int c = 0; c < r; ++c) {
      acc -= static_cast<double>(tr.alpha.at(r + 1, r - c)) *
             tr.mu.derivative(r - c, t) * x(c);
    }
    x(r) = acc / mu;
  }
  return x;
}

Eigen::VectorXd output_coupling(const ModulatingTransform& tr, double t) {
  const double mu = tr.mu.value(t);
  if (std::abs(mu) < tr.mu_floor) {
    return output_coupling_binomial(tr.n, tr.mu, t);
  }
  // First column of (T(mu') + T(mu) A) T(mu)^{-1}, scaled by mu.
  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(tr.n);
  e1(0) = 1.0;
  const Eigen::VectorXd w = solve_transform(tr, t, e1);
  const Eigen::MatrixXd t_mu = eval_transform(tr, t, 0);
  const Eigen::MatrixXd t_dmu = eval_transform(tr, t, 1);
  return mu * (t_dmu * w + t_mu * shift_up(w));
}

Eigen::VectorXd output_coupling_binomial(int n, const ModulatingFunction& mf,
                                         double t) {
  if (n < 1) {
    throw std::invalid_argument("order must be >= 1");
  }
  Eigen::VectorXd b(n);
  double binom = 1.0;  // C(n, j), updated multiplicatively
  for (int j = 1; j <= n; ++j) {
    binom *= static_cast<double>(n - j + 1) / static_cast<double>(j);
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    b(j - 1) = sign * binom * mf.derivative(j, t);
  }
  return b;
}

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw std::invalid_argument(
        "determinant floor must lie in (0, 1), got " + std::to_string(eps));
  }
}

}  // namespace

double activation_time(int n, const ModulatingFunction& mf, double eps) {
  if (n < 1) {
    throw std::invalid_argument("order must be >= 1");
  }
  check_eps(eps);
  if (mf.family() == MuFamily::exponential) {
    // det T = (1 - exp(-(t - t0)))^(n m) crosses eps at
    // t0 - ln(1 - eps^(1/(n m))).
    const double exponent = static_cast<double>(n) * mf.order();
    return mf.start_time() - std::log(1.0 - std::pow(eps, 1.0 / exponent));
  }
  return activation_time_bisect(n, mf, eps);
}

double activation_time_bisect(int n, const ModulatingFunction& mf,
                              double eps) {
  if (n < 1) {
    throw std::invalid_argument("order must be >= 1");
  }
  check_eps(eps);
  // mu(t)^n > eps  <=>  mu(t) > eps^(1/n); mu is increasing from 0.
  const double target = std::pow(eps, 1.0 / n);
  const double t0 = mf.start_time();
  double lo = t0;
  double hi = t0 + 1.0;
  while (mf.value(hi) <= target) {
    hi = t0 + 2.0 * (hi - t0);
    if (hi - t0 > 1e9) {
      throw std::runtime_error("activation time bracket not found");
    }
  }
  for (int it = 0; it < 200 && (hi - lo) > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mf.value(mid) > target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double recovery_gain_bound(const ModulatingTransform& tr, double t_a,
                           double horizon, int samples) {
  if (samples < 2 || !(horizon > 0.0)) {
    throw std::invalid_argument("need at least 2 samples and a positive horizon");
  }
  // ||T^{-1}||_2 = 1 / sigma_min(T); geometric offsets from t_a.
  const double first = 1e-6;
  const double ratio = std::pow(horizon / first,
                                1.0 / static_cast<double>(samples - 2));
  double worst = 0.0;
  double offset = first;
  for (int i = 0; i < samples; ++i) {
    const double t = (i == 0) ? t_a : t_a + offset;
    if (i > 0) offset *= ratio;
    const Eigen::MatrixXd m = eval_transform(tr, t, 0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const double sigma_min = svd.singularValues().tail(1)(0);
    if (sigma_min <= 0.0) {
      throw SingularTransformError(t, tr.mu.value(t));
    }
    worst = std::max(worst, 1.0 / (sigma_min * sigma_min));
  }
  return worst;
}

}  // namespace modobs
