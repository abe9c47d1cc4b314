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

#include <string>

#include "modobs/plant.hpp"

namespace modobs {

/// Physical constants of the two-tank rig, in consistent SI units.
struct TankParams {
  double orifice_area_1 = 5.0265e-5;  // A_o1 [m^2]
  double orifice_area_2 = 5.0265e-5;  // A_o2 [m^2]
  double tank_area_1 = 1.539e-2;      // A_t1 [m^2]
  double tank_area_2 = 1.539e-2;      // A_t2 [m^2]
  double pump_gain = 3.3e-6;          // K_p [m^3 / (s V)]
  double gravity = 9.81;              // [m / s^2]
  double level_floor = 1e-6;          // validity guard on z_1 [m]
};

/// Second-state derivative of the coupled-tanks model in canonical
/// coordinates (z_1, z_2 are water levels, u the pump voltage):
///
///   - (A_o1^2 g / (A_t1 A_t2)) (1 + K_p u / (A_t2 z_2 + A_o2 sqrt(2 g z_1)))
///   - (A_o2 g / A_t2) z_2 / sqrt(2 g z_1).
///
/// Throws std::domain_error when z_1 is at or below the level floor (the
/// square root degenerates) or when the pump-term denominator vanishes.
double coupled_tanks_acceleration(const Eigen::VectorXd& z,
                                  const TankParams& params, double u);

/// Canonical-form plant wrapping the tanks model. The whole acceleration is
/// carried as the drift f (with the pump voltage folded in) and g is zero;
/// the domain guard requires z_1 above the level floor.
PlantModel make_coupled_tanks_plant(const TankParams& params,
                                    double input_bound);

/// Loads `key = value` parameters (one per line, '#' comments). Recognised
/// keys: A_o1, A_o2, A_t1, A_t2, K_p, g, level_floor (optional). Throws
/// ConfigError with file/line on problems.
TankParams load_tank_params(const std::string& path);

}  // namespace modobs
