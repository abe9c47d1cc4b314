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

#include "modobs/tanks.hpp"

#include <cmath>
#include <stdexcept>

#include "modobs/errors.hpp"
#include "modobs/key_value.hpp"

namespace modobs {

double coupled_tanks_acceleration(const Eigen::VectorXd& z,
                                  const TankParams& params, double u) {
  if (z.size() != 2) {
    throw std::invalid_argument("coupled tanks expect a 2-dimensional state");
  }
  const double z1 = z(0);
  const double z2 = z(1);
  if (!(z1 > params.level_floor)) {
    throw std::domain_error("tank level z1 = " + std::to_string(z1) +
                            " at or below the level floor");
  }
  const double root = std::sqrt(2.0 * params.gravity * z1);
  const double den = params.tank_area_2 * z2 + params.orifice_area_2 * root;
  if (std::abs(den) <= 1e-12) {
    throw std::domain_error("vanishing pump-term denominator");
  }
  const double lead = params.orifice_area_1 * params.orifice_area_1 *
                      params.gravity /
                      (params.tank_area_1 * params.tank_area_2);
  return -lead * (1.0 + params.pump_gain * u / den) -
         (params.orifice_area_2 * params.gravity / params.tank_area_2) *
             (z2 / root);
}

PlantModel make_coupled_tanks_plant(const TankParams& params,
                                    double input_bound) {
  if (!(params.orifice_area_1 > 0.0) || !(params.orifice_area_2 > 0.0) ||
      !(params.tank_area_1 > 0.0) || !(params.tank_area_2 > 0.0) ||
      !(params.pump_gain > 0.0) || !(params.gravity > 0.0)) {
    throw std::invalid_argument("tank areas, pump gain and gravity must be positive");
  }
  PlantModel plant;
  plant.n = 2;
  plant.name = "tanks";
  plant.input_bound = input_bound;
  plant.f = [params](const Eigen::VectorXd& z, double u) {
    return coupled_tanks_acceleration(z, params, u);
  };
  plant.valid = [floor = params.level_floor](const Eigen::VectorXd& z) {
    return z.size() == 2 && z(0) > floor;
  };
  return plant;
}

TankParams load_tank_params(const std::string& path) {
  const KeyValueFile kv = KeyValueFile::load(path);
  TankParams p;
  p.orifice_area_1 = kv.get_double("A_o1");
  p.orifice_area_2 = kv.get_double("A_o2");
  p.tank_area_1 = kv.get_double("A_t1");
  p.tank_area_2 = kv.get_double("A_t2");
  p.pump_gain = kv.get_double("K_p");
  p.gravity = kv.get_double("g");
  p.level_floor = kv.get_double("level_floor", p.level_floor);
  if (!(p.orifice_area_1 > 0.0) || !(p.orifice_area_2 > 0.0) ||
      !(p.tank_area_1 > 0.0) || !(p.tank_area_2 > 0.0) ||
      !(p.pump_gain > 0.0) || !(p.gravity > 0.0)) {
    throw ConfigError(path + ": tank parameters must all be positive");
  }
  return p;
}

}  // namespace modobs
