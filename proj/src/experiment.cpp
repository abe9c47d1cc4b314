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

#include "modobs/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "modobs/canonical_form.hpp"
#include "modobs/errors.hpp"
#include "modobs/tanks.hpp"

namespace modobs {

PlantModel make_plant(const ExperimentConfig& cfg) {
  PlantModel plant;
  if (cfg.plant_type == "chain") {
    plant = make_chain_plant(cfg.n);
  } else if (cfg.plant_type == "tanks") {
    plant = make_coupled_tanks_plant(load_tank_params(cfg.params_path),
                                     cfg.input_bound);
  } else {
    throw ConfigError("unknown plant type '" + cfg.plant_type + "'");
  }
  plant.input_bound = cfg.input_bound;
  plant.bounds = cfg.bounds;
  if (cfg.estimate_bounds) {
    plant.bounds = estimate_growth_bounds(plant, cfg.bounds_region,
                                          cfg.bounds_samples, cfg.seed,
                                          cfg.input.value(cfg.t0));
  }
  return plant;
}

ExperimentResult run_configured_experiment(const ExperimentConfig& cfg) {
  const ModulatingFunction mf =
      ModulatingFunction::exponential(cfg.m, cfg.t0);
  const PlantModel plant = make_plant(cfg);
  const ModulatingTransform tr = make_transform(cfg.n, mf, cfg.mu_floor);

  ExperimentResult result;
  ObserverDesign& design = result.design;
  design.n = cfg.n;
  design.gain = cfg.gain;
  design.q = cfg.q;
  design.p = lyapunov_solve(cfg.n, cfg.gain, cfg.q);
  design.nonlinearity_aware = cfg.nonlinearity_aware;
  design.t_a = activation_time(cfg.n, mf, cfg.eps);
  design.varpi =
      convergence_margin(design.p, design.q, mf.sup_value(), plant.input_bound,
                         plant.bounds.gamma_f, plant.bounds.gamma_g);

  ExperimentSummary& summary = result.summary;
  summary.plant = plant.name;
  summary.n = cfg.n;
  summary.t_a = design.t_a;
  summary.varpi = design.varpi;
  summary.bounds_used = plant.bounds;
  summary.bounds_estimated = cfg.estimate_bounds;
  summary.error_threshold = cfg.error_threshold;

  {
    Eigen::VectorXcd ev = error_dynamics_eigenvalues(cfg.n, cfg.gain);
    std::vector<std::complex<double>> sorted(ev.data(), ev.data() + ev.size());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    summary.error_eigenvalues =
        Eigen::Map<Eigen::VectorXcd>(sorted.data(),
                                     static_cast<Eigen::Index>(sorted.size()));
  }

  const Eigen::MatrixXd f = brunovsky_a(cfg.n) - cfg.gain * brunovsky_c(cfg.n);
  summary.lyapunov_residual =
      (f.transpose() * design.p + design.p * f + design.q)
          .cwiseAbs()
          .maxCoeff();
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(design.p);
    summary.lambda_min_p = es.eigenvalues().minCoeff();
    summary.lambda_max_p = es.eigenvalues().maxCoeff();
  }

  summary.tau = recovery_gain_bound(tr, design.t_a);
  try {
    design.kappa = recovery_error_bound(
        design, summary.tau, cfg.xi_hat0.norm(), plant.bounds.delta_f,
        plant.bounds.delta_g, mf.sup_value(), design.t_a, cfg.t0);
    summary.kappa_available = true;
    summary.kappa = design.kappa;
  } catch (const CertificateUnavailableError&) {
    summary.kappa_available = false;
  }

  result.trajectory =
      run_experiment(plant, design, mf, cfg.z0, cfg.xi_hat0,
                     TimeSpan{cfg.t0, cfg.t_end}, cfg.dt, cfg.input,
                     cfg.mu_floor);

  summary.truncated = result.trajectory.truncated;
  summary.truncation_reason = result.trajectory.truncation_reason;
  summary.last_valid_time = result.trajectory.last_valid_time;

  try {
    const ErrorMetrics m =
        error_metrics(result.trajectory, design.t_a, cfg.error_threshold);
    summary.metrics_available = true;
    summary.sup_error = m.sup_error;
    summary.terminal_error = m.terminal_error;
    summary.time_to_threshold = m.time_to_threshold;
  } catch (const std::invalid_argument&) {
    summary.metrics_available = false;  // run ended before t_a
  }

  return result;
}

namespace {

std::string format_complex(const std::complex<double>& c) {
  if (std::abs(c.imag()) < 1e-12 * std::max(1.0, std::abs(c.real()))) {
    return format_g17(c.real());
  }
  const std::string op = c.imag() < 0 ? "-" : "+";
  return format_g17(c.real()) + op + format_g17(std::abs(c.imag())) + "i";
}

}  // namespace

void write_summary(const ExperimentSummary& s, std::ostream& os) {
  os << "plant = " << s.plant << '\n';
  os << "n = " << s.n << '\n';
  os << "t_a = " << format_g17(s.t_a) << '\n';
  os << "eig_A_KC = ";
  for (Eigen::Index i = 0; i < s.error_eigenvalues.size(); ++i) {
    if (i) os << ", ";
    os << format_complex(s.error_eigenvalues(i));
  }
  os << '\n';
  os << "lyapunov_residual = " << format_g17(s.lyapunov_residual) << '\n';
  os << "lambda_min_P = " << format_g17(s.lambda_min_p) << '\n';
  os << "lambda_max_P = " << format_g17(s.lambda_max_p) << '\n';
  os << "gamma_f = " << format_g17(s.bounds_used.gamma_f) << '\n';
  os << "delta_f = " << format_g17(s.bounds_used.delta_f) << '\n';
  os << "gamma_g = " << format_g17(s.bounds_used.gamma_g) << '\n';
  os << "delta_g = " << format_g17(s.bounds_used.delta_g) << '\n';
  os << "bounds_estimated = " << (s.bounds_estimated ? "true" : "false")
     << '\n';
  os << "varpi = " << format_g17(s.varpi) << '\n';
  os << "tau = " << format_g17(s.tau) << '\n';
  if (s.kappa_available) {
    os << "kappa = " << format_g17(s.kappa) << '\n';
  } else {
    os << "kappa = unavailable (varpi <= 0)" << '\n';
  }
  if (s.metrics_available) {
    os << "sup_error_after_ta = " << format_g17(s.sup_error) << '\n';
    os << "terminal_error = " << format_g17(s.terminal_error) << '\n';
    os << "error_threshold = " << format_g17(s.error_threshold) << '\n';
    if (std::isnan(s.time_to_threshold)) {
      os << "time_to_threshold = never" << '\n';
    } else {
      os << "time_to_threshold = " << format_g17(s.time_to_threshold) << '\n';
    }
  }
  if (s.truncated) {
    os << "truncated = true" << '\n';
    os << "truncation_reason = " << s.truncation_reason << '\n';
    os << "last_valid_time = " << format_g17(s.last_valid_time) << '\n';
  }
}

void write_summary_file(const ExperimentSummary& summary,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  write_summary(summary, out);
  if (!out) {
    throw std::runtime_error("failed writing '" + path + "'");
  }
}

}  // namespace modobs
