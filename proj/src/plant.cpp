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

#include "modobs/plant.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace modobs {

Eigen::VectorXd plant_rhs(const PlantModel& plant, const Eigen::VectorXd& z,
                          double u) {
  if (z.size() != plant.n) {
    throw std::invalid_argument("state dimension mismatch");
  }
  Eigen::VectorXd dz = Eigen::VectorXd::Zero(plant.n);
  if (plant.n > 1) dz.head(plant.n - 1) = z.tail(plant.n - 1);
  dz(plant.n - 1) += plant.nonlinearity(z, u);
  return dz;
}

PlantModel make_chain_plant(int n) {
  if (n < 1) {
    throw std::invalid_argument("plant order must be >= 1");
  }
  PlantModel plant;
  plant.n = n;
  plant.name = "chain";
  return plant;
}

AffineGrowthBounds estimate_growth_bounds(const PlantModel& plant,
                                          const Box& region, int samples,
                                          std::uint64_t seed, double u) {
  if (region.lo.size() != plant.n || region.hi.size() != plant.n) {
    throw std::invalid_argument("region dimension mismatch");
  }
  for (int i = 0; i < plant.n; ++i) {
    if (!(region.hi(i) > region.lo(i))) {
      throw std::invalid_argument("region must have positive volume");
    }
  }
  if (samples < 2) {
    throw std::invalid_argument("need at least 2 samples");
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Eigen::VectorXd> states;
  states.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd z(plant.n);
    for (int i = 0; i < plant.n; ++i) {
      z(i) = region.lo(i) + (region.hi(i) - region.lo(i)) * unit(rng);
    }
    if (!plant.in_domain(z)) {
      throw std::domain_error("sampled state outside the plant domain");
    }
    states.push_back(std::move(z));
  }

  std::vector<double> f_vals, g_vals;
  if (plant.f) {
    f_vals.reserve(states.size());
    for (const auto& z : states) f_vals.push_back(plant.f(z, u));
  }
  if (plant.g) {
    g_vals.reserve(states.size());
    for (const auto& z : states) g_vals.push_back(plant.g(z));
  }

  AffineGrowthBounds out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const double d2 = (states[i] - states[j]).squaredNorm();
      if (d2 < 1e-24) continue;
      if (plant.f) {
        const double df = f_vals[i] - f_vals[j];
        out.gamma_f = std::max(out.gamma_f, std::sqrt(df * df / d2));
      }
      if (plant.g) {
        const double dg = g_vals[i] - g_vals[j];
        out.gamma_g = std::max(out.gamma_g, std::sqrt(dg * dg / d2));
      }
    }
  }
  return out;
}

}  // namespace modobs
