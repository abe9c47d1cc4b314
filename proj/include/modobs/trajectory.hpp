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
#include <vector>

namespace modobs {

/// One record on the uniform simulation grid. xi is the diagnostic
/// transformed state integrated alongside the plant, xi_hat the observer
/// state, z_hat the gated estimate (identically zero before the activation
/// time).
struct TrajectorySample {
  double t = 0.0;
  Eigen::VectorXd z;
  Eigen::VectorXd xi;
  Eigen::VectorXd xi_hat;
  Eigen::VectorXd z_hat;
  double y = 0.0;
  double u = 0.0;
  double err_z = 0.0;   // |z - z_hat|
  double err_xi = 0.0;  // |xi - xi_hat|
};

/// Time-indexed simulation output on the grid t_k = t_begin + k dt. When a
/// plant domain error interrupts the run the trajectory keeps every sample
/// up to the failure and carries the marker fields instead of data past it.
struct Trajectory {
  double t_begin = 0.0;
  double dt = 0.0;
  int state_dim = 0;
  std::vector<TrajectorySample> samples;

  bool truncated = false;
  std::string truncation_reason;
  double last_valid_time = std::numeric_limits<double>::quiet_NaN();
};

/// CSV schema (exact header, n = state_dim):
///   t,z1..zn,xi1..xin,xihat1..xihatn,zhat1..zhatn,y,u,err_z,err_xi
/// Floating point is printed with 17 significant digits, so identical runs
/// produce byte-identical files.
void write_csv(const Trajectory& traj, std::ostream& os);
void write_csv_file(const Trajectory& traj, const std::string& path);

/// 17-significant-digit, locale-independent float formatting used by every
/// report writer.
std::string format_g17(double v);

}  // namespace modobs
