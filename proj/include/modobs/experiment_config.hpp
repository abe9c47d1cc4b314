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
#include <string>

#include "modobs/input_signal.hpp"
#include "modobs/plant.hpp"

namespace modobs {

/// Fully resolved experiment description, loaded from a sectioned
/// `key = value` file. Validation is line-precise: violations raise
/// ConfigError pointing at the offending line.
struct ExperimentConfig {
  // [plant]
  std::string plant_type;   // "chain" | "tanks"
  std::string params_path;  // tank parameter file (resolved vs config dir)
  int n = 0;
  double input_bound = 0.0;
  AffineGrowthBounds bounds;
  bool estimate_bounds = false;
  Box bounds_region;
  int bounds_samples = 200;
  std::uint64_t seed = 12345;

  // [modulating]
  int m = 0;
  double t0 = 0.0;

  // [transform]
  double eps = 0.01;
  double mu_floor = 1e-12;

  // [observer]
  Eigen::VectorXd gain;
  Eigen::MatrixXd q;
  bool nonlinearity_aware = false;
  Eigen::VectorXd xi_hat0;

  // [simulation]
  Eigen::VectorXd z0;
  double t_end = 10.0;
  double dt = 1e-3;
  InputSignal input;
  double error_threshold = 1e-2;

  // [output]
  std::string out_dir = "out";
  std::string prefix;

  bool require_certificate = false;

  std::string source_path;  // where this config was loaded from
};

/// Loads and validates a config file. Enforces m >= n (the transformed
/// state must start at exactly zero), eps in (0, 1), positive dt, matching
/// vector dimensions and existing referenced files.
ExperimentConfig load_experiment_config(const std::string& path);

}  // namespace modobs
