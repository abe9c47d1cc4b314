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

#include "modobs/trajectory.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace modobs {

std::string format_g17(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (res.ec != std::errc()) {
    throw std::runtime_error("float formatting failed");
  }
  return std::string(buf, res.ptr);
}

void write_csv(const Trajectory& traj, std::ostream& os) {
  const int n = traj.state_dim;
  os << 't';
  const char* groups[] = {"z", "xi", "xihat", "zhat"};
  for (const char* g : groups) {
    for (int i = 1; i <= n; ++i) os << ',' << g << i;
  }
  os << ",y,u,err_z,err_xi\n";
  for (const TrajectorySample& s : traj.samples) {
    os << format_g17(s.t);
    const Eigen::VectorXd* vecs[] = {&s.z, &s.xi, &s.xi_hat, &s.z_hat};
    for (const Eigen::VectorXd* v : vecs) {
      for (int i = 0; i < n; ++i) os << ',' << format_g17((*v)(i));
    }
    os << ',' << format_g17(s.y) << ',' << format_g17(s.u) << ','
       << format_g17(s.err_z) << ',' << format_g17(s.err_xi) << '\n';
  }
}

void write_csv_file(const Trajectory& traj, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  write_csv(traj, out);
  if (!out) {
    throw std::runtime_error("failed writing '" + path + "'");
  }
}

}  // namespace modobs
