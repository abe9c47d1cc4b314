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

#include <cstdint>
#include <functional>
#include <string>

namespace modobs {

/// Growth constants of the plant nonlinearities:
///   |f(z1) - f(z2)|^2 <= gamma_f^2 |z1 - z2|^2 + delta_f^2,
/// and the same shape for g.
struct AffineGrowthBounds {
  double gamma_f = 0.0;
  double delta_f = 0.0;
  double gamma_g = 0.0;
  double delta_g = 0.0;
};

/// Plant in observable canonical form:
///
///   zdot = A z + e_n (f(z, u) + g(z) u),   y = z_1,
///
/// with A the chain-of-integrators matrix. Empty f/g stand for identically
/// zero. f receives the input as well because some models (the coupled
/// tanks) fold the pump term into the drift instead of exposing a separate
/// input gain.
///
/// Plants are immutable value objects; evaluation is pure.
struct PlantModel {
  int n = 0;
  std::function<double(const Eigen::VectorXd&, double)> f;
  std::function<double(const Eigen::VectorXd&)> g;
  double input_bound = 0.0;  // M_u; inputs are clipped to [-M_u, M_u]
  AffineGrowthBounds bounds;
  std::function<bool(const Eigen::VectorXd&)> valid;  // state-domain guard
  std::string name;

  bool has_nonlinearity() const {
    return static_cast<bool>(f) || static_cast<bool>(g);
  }

  /// f(z, u) + g(z) u, the last row of the drift.
  double nonlinearity(const Eigen::VectorXd& z, double u) const {
    double v = 0.0;
    if (f) v += f(z, u);
    if (g) v += g(z) * u;
    return v;
  }

  bool in_domain(const Eigen::VectorXd& z) const { return !valid || valid(z); }
};

/// Full state derivative A z + e_n (f + g u). Does not apply the domain
/// guard; callers decide whether to check first.
Eigen::VectorXd plant_rhs(const PlantModel& plant, const Eigen::VectorXd& z,
                          double u);

/// Pure integrator chain with f = g = 0: the plant on which the observer is
/// exact. Throws std::invalid_argument for n < 1.
PlantModel make_chain_plant(int n);

/// Axis-aligned box in state space.
struct Box {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
};

/// Sampling-based estimates of the growth constants over a box: gamma is the
/// steepest pairwise slope among `samples` uniformly drawn states and delta
/// is zero, which is the least pair satisfying the inequality on the drawn
/// set. These are estimates, not certified bounds. f is frozen at the input
/// value u. Throws std::invalid_argument for a degenerate box or fewer than
/// two samples, and std::domain_error when a sampled state falls outside the
/// plant domain.
AffineGrowthBounds estimate_growth_bounds(const PlantModel& plant,
                                          const Box& region, int samples,
                                          std::uint64_t seed, double u = 0.0);

}  // namespace modobs
