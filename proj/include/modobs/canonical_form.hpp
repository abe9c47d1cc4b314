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

namespace modobs {

/// Chain-of-integrators drift matrix of the observable canonical form:
/// ones on the superdiagonal, zeros elsewhere.
inline Eigen::MatrixXd brunovsky_a(int n) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = 1.0;
  return a;
}

/// Output row selecting the first state.
inline Eigen::RowVectorXd brunovsky_c(int n) {
  Eigen::RowVectorXd c = Eigen::RowVectorXd::Zero(n);
  c(0) = 1.0;
  return c;
}

/// Applies the shift matrix without forming it: (A x)(i) = x(i+1), last
/// entry zero.
inline Eigen::VectorXd shift_up(const Eigen::VectorXd& x) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(x.size());
  if (x.size() > 1) out.head(x.size() - 1) = x.tail(x.size() - 1);
  return out;
}

}  // namespace modobs
