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

#include <functional>
#include <limits>

#include "modobs/input_signal.hpp"
#include "modobs/observer.hpp"
#include "modobs/plant.hpp"
#include "modobs/trajectory.hpp"

namespace modobs {

using RhsFn = std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>;

/// One classical fourth-order Runge-Kutta update. Fixed step: determinism is
/// worth more than adaptivity at these dimensions. Domain errors raised by
/// the rhs propagate and carry the stage time. Throws std::invalid_argument
/// for dt <= 0.
Eigen::VectorXd rk4_step(const RhsFn& rhs, const Eigen::VectorXd& state,
                         double t, double dt);

struct TimeSpan {
  double begin = 0.0;
  double end = 0.0;
};

/// Co-integrates the plant, the diagnostic transformed state and the
/// observer on one clock with fixed-step RK4, starting at the modulating
/// function's start time (tspan.begin must equal it). The first component of
/// xi_hat0 is forced to zero; the diagnostic state starts at exactly zero.
/// The estimate channel applies the recovery gate at design.t_a. A plant
/// domain error ends the run early: the trajectory keeps all samples before
/// the failure and carries the error marker and last valid time.
///
/// Identical arguments produce bit-identical trajectories. Independent runs
/// may execute concurrently; nothing here mutates shared state.
Trajectory run_experiment(const PlantModel& plant, const ObserverDesign& design,
                          const ModulatingFunction& mf,
                          const Eigen::VectorXd& z0,
                          const Eigen::VectorXd& xi_hat0, TimeSpan tspan,
                          double dt, const InputSignal& input,
                          double mu_floor = 1e-12);

struct ErrorMetrics {
  double sup_error = 0.0;       // sup of |z - z_hat| over t >= t_a
  double terminal_error = 0.0;  // |z - z_hat| at the last sample
  double time_to_threshold =
      std::numeric_limits<double>::quiet_NaN();  // first t >= t_a under the
                                                 // threshold; NaN if never
};

/// Error summary over the post-activation window. Throws
/// std::invalid_argument when the trajectory does not extend past t_a.
ErrorMetrics error_metrics(const Trajectory& traj, double t_a,
                           double threshold);

}  // namespace modobs
