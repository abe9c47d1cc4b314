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

#include <stdexcept>
#include <string>

namespace modobs {

/// The triangular transformation is numerically singular at the requested
/// time (|mu(t)| fell below the configured floor).
class SingularTransformError : public std::domain_error {
 public:
  SingularTransformError(double t, double mu)
      : std::domain_error("transform singular at t = " + std::to_string(t) +
                          " (mu = " + std::to_string(mu) + ")"),
        time(t),
        mu_value(mu) {}

  double time;
  double mu_value;
};

/// Plant dynamics were evaluated outside their validity domain. Carries the
/// simulation time at which the violation happened.
class PlantDomainError : public std::domain_error {
 public:
  PlantDomainError(double t, const std::string& what)
      : std::domain_error(what + " (t = " + std::to_string(t) + ")"),
        time(t) {}

  double time;
};

/// A - K C has an eigenvalue with nonnegative real part, so no Lyapunov
/// certificate exists for the gain.
class UnstableDynamicsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The convergence margin came out nonpositive; the error bound cannot be
/// produced for the supplied constants.
class CertificateUnavailableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problem in a configuration or parameter file, with file and line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& file, int line_no, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line_no) + ": " + what),
        file(file),
        line(line_no) {}

  explicit ConfigError(const std::string& what)
      : std::runtime_error(what), line(0) {}

  std::string file;
  int line;
};

}  // namespace modobs
