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

#include "modobs/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "modobs/errors.hpp"

namespace modobs {

Eigen::VectorXd rk4_step(const RhsFn& rhs, const Eigen::VectorXd& state,
                         double t, double dt) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("step size must be positive");
  }
  const Eigen::VectorXd k1 = rhs(t, state);
  const Eigen::VectorXd k2 = rhs(t + 0.5 * dt, state + 0.5 * dt * k1);
  const Eigen::VectorXd k3 = rhs(t + 0.5 * dt, state + 0.5 * dt * k2);
  const Eigen::VectorXd k4 = rhs(t + dt, state + dt * k3);
  return state + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory run_experiment(const PlantModel& plant, const ObserverDesign& design,
                          const ModulatingFunction& mf,
                          const Eigen::VectorXd& z0,
                          const Eigen::VectorXd& xi_hat0, TimeSpan tspan,
                          double dt, const InputSignal& input,
                          double mu_floor) {
  const int n = plant.n;
  if (design.n != n) {
    throw std::invalid_argument("plant and design order mismatch");
  }
  if (z0.size() != n || xi_hat0.size() != n) {
    throw std::invalid_argument("initial condition dimension mismatch");
  }
  if (!(dt > 0.0)) {
    throw std::invalid_argument("step size must be positive");
  }
  if (!(tspan.end > tspan.begin)) {
    throw std::invalid_argument("time span must have positive length");
  }
  if (tspan.begin != mf.start_time()) {
    throw std::invalid_argument(
        "time span must start at the modulating-function start time");
  }

  const ModulatingTransform tr = make_transform(n, mf, mu_floor);

  // Stacked state [z; xi; xi_hat] so every RK4 stage sees a consistent
  // plant state, output and reference.
  Eigen::VectorXd state(3 * n);
  state.head(n) = z0;
  state.segment(n, n).setZero();  // xi(t0) = 0 by construction
  state.tail(n) = xi_hat0;
  state(2 * n) = 0.0;  // xihat_1(t0) forced to zero: xihat_1 = mu yhat

  const RhsFn rhs = [&](double t, const Eigen::VectorXd& x) -> Eigen::VectorXd {
    const Eigen::VectorXd z = x.head(n);
    if (!plant.in_domain(z)) {
      throw PlantDomainError(t, plant.name + ": state outside validity domain");
    }
    const double u = input.clipped(t, plant.input_bound);
    const double y = z(0);
    Eigen::VectorXd dx(3 * n);
    dx.head(n) = plant_rhs(plant, z, u);
    dx.segment(n, n) =
        transformed_rhs(x.segment(n, n), t, y, u, plant, tr, &z, design.t_a);
    dx.tail(n) = observer_rhs(x.tail(n), t, y, u, design, tr, plant);
    return dx;
  };

  const long count = std::lround((tspan.end - tspan.begin) / dt);
  if (count < 1) {
    throw std::invalid_argument("time span shorter than one step");
  }

  Trajectory traj;
  traj.t_begin = tspan.begin;
  traj.dt = dt;
  traj.state_dim = n;
  traj.samples.reserve(static_cast<std::size_t>(count) + 1);

  for (long k = 0; k <= count; ++k) {
    const double t = tspan.begin + static_cast<double>(k) * dt;

    TrajectorySample s;
    s.t = t;
    s.z = state.head(n);
    s.xi = state.segment(n, n);
    s.xi_hat = state.tail(n);
    s.z_hat = recover_state(s.xi_hat, t, design.t_a, tr);
    s.y = s.z(0);
    s.u = input.clipped(t, plant.input_bound);
    s.err_z = (s.z - s.z_hat).norm();
    s.err_xi = (s.xi - s.xi_hat).norm();
    traj.samples.push_back(std::move(s));

    if (k == count) break;
    try {
      state = rk4_step(rhs, state, t, dt);
    } catch (const std::domain_error& e) {
      traj.truncated = true;
      traj.truncation_reason = e.what();
      traj.last_valid_time = t;
      break;
    }
  }
  return traj;
}

ErrorMetrics error_metrics(const Trajectory& traj, double t_a,
                           double threshold) {
  ErrorMetrics m;
  m.sup_error = 0.0;
  bool any = false;
  for (const TrajectorySample& s : traj.samples) {
    if (s.t < t_a) continue;
    any = true;
    m.sup_error = std::max(m.sup_error, s.err_z);
    m.terminal_error = s.err_z;
    if (std::isnan(m.time_to_threshold) && s.err_z <= threshold) {
      m.time_to_threshold = s.t;
    }
  }
  if (!any) {
    throw std::invalid_argument(
        "trajectory does not extend past the activation time");
  }
  return m;
}

}  // namespace modobs
