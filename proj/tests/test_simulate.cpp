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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "modobs/observer.hpp"
#include "modobs/simulate.hpp"
#include "modobs/tanks.hpp"
#include "modobs/trajectory.hpp"

using namespace modobs;

namespace {

Eigen::VectorXd vec1(double a) {
  return Eigen::VectorXd::Constant(1, a);
}

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

ObserverDesign reference_design(double q_scale, double eps,
                                const ModulatingFunction& mf) {
  ObserverDesign d;
  d.n = 2;
  d.gain = vec2(30.0, 200.0);
  d.q = q_scale * Eigen::MatrixXd::Identity(2, 2);
  d.p = lyapunov_solve(2, d.gain, d.q);
  d.t_a = activation_time(2, mf, eps);
  return d;
}

}  // namespace

TEST_CASE("one RK4 step on exponential decay") {
  const RhsFn rhs = [](double, const Eigen::VectorXd& y) {
    return Eigen::VectorXd(-y);
  };
  const Eigen::VectorXd y1 = rk4_step(rhs, vec1(1.0), 0.0, 0.1);
  CHECK(std::abs(y1(0) - std::exp(-0.1)) <= 1e-6);
  CHECK(y1(0) == doctest::Approx(0.904837).epsilon(1e-6));
}

TEST_CASE("RK4 keeps a constant state constant") {
  const RhsFn rhs = [](double, const Eigen::VectorXd& y) {
    return Eigen::VectorXd(Eigen::VectorXd::Zero(y.size()));
  };
  const Eigen::VectorXd y1 = rk4_step(rhs, vec2(3.0, -7.0), 0.0, 0.5);
  CHECK(y1(0) == 3.0);
  CHECK(y1(1) == -7.0);
}

TEST_CASE("halving the step shrinks the global decay error about 16x") {
  const RhsFn rhs = [](double, const Eigen::VectorXd& y) {
    return Eigen::VectorXd(-y);
  };
  const auto integrate = [&](double dt) {
    Eigen::VectorXd y = vec1(1.0);
    const int steps = static_cast<int>(std::lround(1.0 / dt));
    for (int k = 0; k < steps; ++k) y = rk4_step(rhs, y, dt * k, dt);
    return std::abs(y(0) - std::exp(-1.0));
  };
  const double ratio = integrate(0.1) / integrate(0.05);
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("measured convergence order on a smooth nonlinear scalar problem") {
  // y' = -y^2, y(0) = 1, exact y(t) = 1 / (1 + t).
  const RhsFn rhs = [](double, const Eigen::VectorXd& y) {
    return Eigen::VectorXd(-y.array().square());
  };
  const auto err = [&](double dt) {
    Eigen::VectorXd y = vec1(1.0);
    const int steps = static_cast<int>(std::lround(1.0 / dt));
    for (int k = 0; k < steps; ++k) y = rk4_step(rhs, y, dt * k, dt);
    return std::abs(y(0) - 0.5);
  };
  const double order = std::log2(err(0.05) / err(0.025));
  CHECK(order >= 3.9);
}

TEST_CASE("RK4 rejects a nonpositive step") {
  const RhsFn rhs = [](double, const Eigen::VectorXd& y) { return y; };
  CHECK_THROWS_AS(rk4_step(rhs, vec1(1.0), 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(rk4_step(rhs, vec1(1.0), 0.0, -0.1), std::invalid_argument);
}

TEST_CASE("chain experiment converges well under a relative millesimal by "
          "five seconds past activation") {
  const auto mf = ModulatingFunction::exponential(2, 0.0);
  const auto plant = make_chain_plant(2);
  const auto design = reference_design(0.01, 0.01, mf);
  const Trajectory traj =
      run_experiment(plant, design, mf, vec2(4.0, 4.0), vec2(0.0, 4.0),
                     TimeSpan{0.0, 10.0}, 1e-3, InputSignal::constant(0.0));
  CHECK_FALSE(traj.truncated);
  const double z0_norm = vec2(4.0, 4.0).norm();
  double err_at = -1.0;
  for (const auto& s : traj.samples) {
    if (std::abs(s.t - (design.t_a + 5.0)) <= 0.5e-3) err_at = s.err_z;
  }
  REQUIRE(err_at >= 0.0);
  CHECK(err_at <= 1e-3 * z0_norm);
}

TEST_CASE("the estimate channel is identically zero before activation") {
  const auto mf = ModulatingFunction::exponential(2, 0.0);
  const auto plant = make_chain_plant(2);
  const auto design = reference_design(0.01, 0.01, mf);
  const Trajectory traj =
      run_experiment(plant, design, mf, vec2(4.0, 4.0), vec2(0.0, 4.0),
                     TimeSpan{0.0, 2.0}, 1e-3, InputSignal::constant(0.0));
  for (const auto& s : traj.samples) {
    if (s.t < design.t_a) {
      CHECK(s.z_hat.isZero(0.0));
      CHECK(s.err_z == doctest::Approx(s.z.norm()));
    } else {
      CHECK(s.z_hat.allFinite());
    }
  }
}

TEST_CASE("diagnostic transformed channel tracks the image of the plant "
          "state end to end") {
  const auto mf = ModulatingFunction::exponential(2, 0.0);
  const TankParams params;
  const auto plant = make_coupled_tanks_plant(params, 1.0);
  const auto design = reference_design(0.01, 0.01, mf);
  const auto tr = make_transform(2, mf);
  const Trajectory traj =
      run_experiment(plant, design, mf, vec2(0.04, 0.04), vec2(0.0, 0.04),
                     TimeSpan{0.0, 5.0}, 1e-3, InputSignal::constant(1.0));
  REQUIRE_FALSE(traj.truncated);
  double worst = 0.0;
  for (const auto& s : traj.samples) {
    worst = std::max(
        worst, (s.xi - eval_transform(tr, s.t) * s.z).cwiseAbs().maxCoeff());
  }
  CHECK(worst <= 1e-4);
}

TEST_CASE("domain violations truncate the trajectory with a marker") {
  const auto mf = ModulatingFunction::exponential(2, 0.0);
  TankParams params;
  const auto plant = make_coupled_tanks_plant(params, 5.0);
  const auto design = reference_design(0.01, 0.01, mf);
  // Draining start: z2 < 0 drives z1 through the level floor quickly.
  const Trajectory traj =
      run_experiment(plant, design, mf, vec2(0.01, -0.05), vec2(0.0, 0.0),
                     TimeSpan{0.0, 5.0}, 1e-3, InputSignal::constant(0.0));
  CHECK(traj.truncated);
  CHECK_FALSE(traj.truncation_reason.empty());
  CHECK(std::isfinite(traj.last_valid_time));
  CHECK(traj.samples.back().t == doctest::Approx(traj.last_valid_time));
  CHECK(traj.last_valid_time < 5.0);
}

TEST_CASE("argument errors in the runner") {
  const auto mf = ModulatingFunction::exponential(2, 0.0);
  const auto plant = make_chain_plant(2);
  const auto design = reference_design(0.01, 0.01, mf);
  CHECK_THROWS_AS(
      run_experiment(plant, design, mf, vec2(1.0, 1.0), vec2(0.0, 0.0),
                     TimeSpan{0.0, 1.0}, 0.0, InputSignal::constant(0.0)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      run_experiment(plant, design, mf, vec2(1.0, 1.0), vec2(0.0, 0.0),
                     TimeSpan{0.0, 1.0}, -1e-3, InputSignal::constant(0.0)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      run_experiment(plant, design, mf, vec2(1.0, 1.0), vec2(0.0, 0.0),
                     TimeSpan{0.5, 1.0}, 1e-3, InputSignal::constant(0.0)),
      std::invalid_argument);
}

TEST_CASE("error metrics over the post-activation window") {
  const auto mf = ModulatingFunction::exponential(2, 0.0);
  const auto plant = make_chain_plant(2);
  const auto design = reference_design(0.01, 0.01, mf);
  const Trajectory traj =
      run_experiment(plant, design, mf, vec2(4.0, 4.0), vec2(0.0, 0.0),
                     TimeSpan{0.0, 6.0}, 1e-3, InputSignal::constant(0.0));
  // Zero-started observer on the chain: the estimate is exact after t_a.
  const ErrorMetrics m = error_metrics(traj, design.t_a, 1e-8);
  CHECK(m.sup_error <= 1e-6);
  CHECK(m.terminal_error <= m.sup_error);
  CHECK(m.time_to_threshold == doctest::Approx(traj.samples.front().t +
                                               std::ceil(design.t_a / 1e-3) *
                                                   1e-3)
                                   .epsilon(1e-6));
  CHECK_THROWS_AS(error_metrics(traj, 100.0, 1e-2), std::invalid_argument);
}

TEST_CASE("error metrics on a hand-built exact trajectory") {
  Trajectory traj;
  traj.t_begin = 0.0;
  traj.dt = 1.0;
  traj.state_dim = 1;
  for (int k = 0; k <= 3; ++k) {
    TrajectorySample s;
    s.t = static_cast<double>(k);
    s.z = vec1(2.0);
    s.z_hat = (k >= 1) ? vec1(2.0) : vec1(0.0);  // exact from t = 1 on
    s.err_z = (s.z - s.z_hat).norm();
    traj.samples.push_back(s);
  }
  const ErrorMetrics m = error_metrics(traj, 1.0, 0.5);
  CHECK(m.sup_error == 0.0);
  CHECK(m.terminal_error == 0.0);
  CHECK(m.time_to_threshold == 1.0);
}

TEST_CASE("identical runs serialize to identical bytes") {
  const auto mf = ModulatingFunction::exponential(2, 0.0);
  const TankParams params;
  const auto plant = make_coupled_tanks_plant(params, 1.0);
  const auto design = reference_design(0.01, 0.01, mf);
  const auto run = [&] {
    return run_experiment(plant, design, mf, vec2(0.04, 0.04), vec2(0.0, 0.04),
                          TimeSpan{0.0, 2.0}, 1e-3,
                          InputSignal::constant(1.0));
  };
  std::ostringstream a, b;
  write_csv(run(), a);
  write_csv(run(), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().substr(0, a.str().find('\n')) ==
        "t,z1,z2,xi1,xi2,xihat1,xihat2,zhat1,zhat2,y,u,err_z,err_xi");
}

TEST_CASE("input signals clip to the plant bound") {
  const InputSignal s = InputSignal::sine(0.0, 5.0, 1.0);
  CHECK(s.clipped(std::asin(1.0), 2.0) == 2.0);
  CHECK(s.clipped(-std::asin(1.0), 2.0) == -2.0);
  const InputSignal st = InputSignal::step(0.0, 3.0, 1.0);
  CHECK(st.value(0.5) == 0.0);
  CHECK(st.value(1.5) == 3.0);
  CHECK(st.clipped(1.5, 1.0) == 1.0);
  // A zero bound silences the input entirely.
  CHECK(InputSignal::constant(4.0).clipped(0.0, 0.0) == 0.0);
}
