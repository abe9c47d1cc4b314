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

#include <iosfwd>
#include <limits>
#include <string>

#include "modobs/experiment_config.hpp"
#include "modobs/observer.hpp"
#include "modobs/simulate.hpp"
#include "modobs/trajectory.hpp"

namespace modobs {

/// Everything the summary report carries. All values come straight from the
/// library computations; the report layer only formats them.
struct ExperimentSummary {
  std::string plant;
  int n = 0;
  double t_a = 0.0;
  Eigen::VectorXcd error_eigenvalues;  // of A - K C, sorted by real part
  double lyapunov_residual = 0.0;
  double lambda_min_p = 0.0;
  double lambda_max_p = 0.0;
  double varpi = 0.0;
  double tau = 0.0;
  bool kappa_available = false;
  double kappa = std::numeric_limits<double>::quiet_NaN();
  AffineGrowthBounds bounds_used;
  bool bounds_estimated = false;

  bool metrics_available = false;
  double sup_error = std::numeric_limits<double>::quiet_NaN();
  double terminal_error = std::numeric_limits<double>::quiet_NaN();
  double time_to_threshold = std::numeric_limits<double>::quiet_NaN();
  double error_threshold = 0.0;

  bool truncated = false;
  std::string truncation_reason;
  double last_valid_time = std::numeric_limits<double>::quiet_NaN();
};

struct ExperimentResult {
  ObserverDesign design;
  Trajectory trajectory;
  ExperimentSummary summary;
};

/// Builds the plant a config describes, including growth-bound estimation
/// when requested.
PlantModel make_plant(const ExperimentConfig& cfg);

/// Runs the whole pipeline a config describes: design validation, activation
/// time, margin and error bound, simulation, error metrics.
ExperimentResult run_configured_experiment(const ExperimentConfig& cfg);

/// `key = value` rendering of the summary, 17 significant digits, stable
/// line order (the same bytes for the same run).
void write_summary(const ExperimentSummary& summary, std::ostream& os);
void write_summary_file(const ExperimentSummary& summary,
                        const std::string& path);

}  // namespace modobs
