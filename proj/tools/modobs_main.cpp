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

// Command-line front end. Subcommands: simulate, activation-time,
// check-gain, validate-mf, batch.
//
// Exit codes: 0 success, 2 configuration or argument problem, 3 numerical
// or domain failure, 4 certificate unavailable (non-Hurwitz gain or a
// nonpositive convergence margin where a certificate was demanded).

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "modobs/errors.hpp"
#include "modobs/experiment.hpp"
#include "modobs/experiment_config.hpp"
#include "modobs/modulating_function.hpp"
#include "modobs/observer.hpp"
#include "modobs/trajectory.hpp"
#include "modobs/transform.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitNoCertificate = 4;

struct SimulateOptions {
  std::string config_path;
  std::string out_dir;  // overrides [output] dir when nonempty
  double dt = 0.0;      // overrides when > 0
  double eps = 0.0;     // overrides when > 0
  std::uint64_t seed = 0;
  bool has_seed = false;
};

modobs::ExperimentConfig load_with_overrides(const SimulateOptions& opt) {
  modobs::ExperimentConfig cfg =
      modobs::load_experiment_config(opt.config_path);
  if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;
  if (opt.dt > 0.0) cfg.dt = opt.dt;
  if (opt.eps > 0.0) {
    if (!(opt.eps < 1.0)) {
      throw modobs::ConfigError("--eps must lie in (0, 1)");
    }
    cfg.eps = opt.eps;
  }
  if (opt.has_seed) cfg.seed = opt.seed;
  return cfg;
}

// Runs one configured experiment and writes its artifacts. Returns the exit
// code; output lines are prefixed with `tag` when nonempty (batch mode).
int run_simulation(const modobs::ExperimentConfig& cfg, std::ostream& os,
                   const std::string& tag) {
  const modobs::ExperimentResult result =
      modobs::run_configured_experiment(cfg);

  fs::create_directories(cfg.out_dir);
  const fs::path csv_path = fs::path(cfg.out_dir) / (cfg.prefix + "_trajectory.csv");
  const fs::path summary_path = fs::path(cfg.out_dir) / (cfg.prefix + "_summary.txt");
  modobs::write_csv_file(result.trajectory, csv_path.string());
  modobs::write_summary_file(result.summary, summary_path.string());

  std::ostringstream block;
  if (!tag.empty()) block << "=== " << tag << " ===\n";
  modobs::write_summary(result.summary, block);
  block << "trajectory = " << csv_path.string() << '\n';
  block << "summary = " << summary_path.string() << '\n';
  os << block.str();

  if (result.summary.truncated) return kExitNumeric;
  if (cfg.require_certificate && !result.summary.kappa_available) {
    return kExitNoCertificate;
  }
  return kExitOk;
}

int cmd_simulate(const SimulateOptions& opt) {
  return run_simulation(load_with_overrides(opt), std::cout, "");
}

int cmd_activation_time(int n, int m, double eps, double t0) {
  const auto mf = modobs::ModulatingFunction::exponential(m, t0);
  const double t_a = modobs::activation_time(n, mf, eps);
  std::cout << "t_a = " << modobs::format_g17(t_a) << '\n';
  return kExitOk;
}

int cmd_check_gain(int n, const std::vector<double>& gain_values,
                   double q_scale, const std::vector<double>& q_diag,
                   double m0, double input_bound, double gamma_f,
                   double gamma_g) {
  if (static_cast<int>(gain_values.size()) != n) {
    throw modobs::ConfigError("--gain must have " + std::to_string(n) +
                              " entries");
  }
  Eigen::VectorXd gain(n);
  for (int i = 0; i < n; ++i) gain(i) = gain_values[static_cast<std::size_t>(i)];

  Eigen::MatrixXd q;
  if (!q_diag.empty()) {
    if (static_cast<int>(q_diag.size()) != n) {
      throw modobs::ConfigError("--q-diag must have " + std::to_string(n) +
                                " entries");
    }
    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i) d(i) = q_diag[static_cast<std::size_t>(i)];
    q = d.asDiagonal();
  } else {
    q = q_scale * Eigen::MatrixXd::Identity(n, n);
  }

  const Eigen::VectorXcd ev = modobs::error_dynamics_eigenvalues(n, gain);
  std::cout << "eig_A_KC =";
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    std::cout << (i ? ", " : " ") << modobs::format_g17(ev(i).real());
    if (std::abs(ev(i).imag()) > 1e-12) {
      std::cout << (ev(i).imag() < 0 ? "-" : "+")
                << modobs::format_g17(std::abs(ev(i).imag())) << "i";
    }
  }
  std::cout << '\n';

  // Throws UnstableDynamicsError (exit 4) when the gain yields no
  // certificate.
  const Eigen::MatrixXd p = modobs::lyapunov_solve(n, gain, q);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p);
  std::cout << "P =\n" << p << '\n';
  std::cout << "lambda_min_P = " << modobs::format_g17(es.eigenvalues().minCoeff())
            << '\n';
  std::cout << "lambda_max_P = " << modobs::format_g17(es.eigenvalues().maxCoeff())
            << '\n';
  const double varpi =
      modobs::convergence_margin(p, q, m0, input_bound, gamma_f, gamma_g);
  std::cout << "varpi = " << modobs::format_g17(varpi) << '\n';
  std::cout << "hurwitz = true\n";
  return kExitOk;
}

int cmd_validate_mf(int m, double t0, double t_max, int points,
                    const std::vector<double>& extra_times) {
  const auto mf = modobs::ModulatingFunction::exponential(m, t0);
  std::vector<double> grid;
  if (points > 0) {
    for (int k = 0; k <= points; ++k) {
      grid.push_back(t0 + t_max * static_cast<double>(k) /
                              static_cast<double>(points));
    }
  }
  for (double t : extra_times) grid.push_back(t);
  const modobs::MuValidationReport report = modobs::validate(mf, grid);
  std::cout << "vanishes_at_start = "
            << (report.vanishes_at_start ? "true" : "false") << '\n';
  std::cout << "max_start_residual = "
            << modobs::format_g17(report.max_start_residual) << '\n';
  std::cout << "bounded = " << (report.bounded ? "true" : "false") << '\n';
  std::cout << "zero_flags = " << report.zero_flags.size() << '\n';
  for (const auto& flag : report.zero_flags) {
    std::cout << "zero_flag: derivative " << flag.derivative_order << " at t = "
              << modobs::format_g17(flag.t) << " (value "
              << modobs::format_g17(flag.value) << ")\n";
  }
  std::cout << "passed = " << (report.passed() ? "true" : "false") << '\n';
  return report.passed() ? kExitOk : kExitNumeric;
}

int cmd_batch(const std::string& list_path, int jobs,
              const std::string& out_root, double dt, double eps,
              std::uint64_t seed, bool has_seed);

int dispatch_exceptions(const std::function<int()>& body) {
  try {
    return body();
  } catch (const modobs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const modobs::CertificateUnavailableError& e) {
    std::cerr << e.what() << '\n';
    return kExitNoCertificate;
  } catch (const modobs::UnstableDynamicsError& e) {
    std::cerr << e.what() << '\n';
    return kExitNoCertificate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}

int cmd_batch(const std::string& list_path, int jobs,
              const std::string& out_root, double dt, double eps,
              std::uint64_t seed, bool has_seed) {
  std::ifstream in(list_path);
  if (!in) {
    throw modobs::ConfigError("cannot open batch list '" + list_path + "'");
  }
  std::vector<fs::path> configs;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    fs::path p(line.substr(begin, end - begin + 1));
    if (p.is_relative()) p = fs::path(list_path).parent_path() / p;
    configs.push_back(p);
  }
  if (configs.empty()) {
    throw modobs::ConfigError(list_path + ": no experiment configs listed");
  }

  std::atomic<std::size_t> next{0};
  std::atomic<int> worst{kExitOk};
  std::mutex io_mutex;
  const int worker_count =
      std::max(1, std::min<int>(jobs, static_cast<int>(configs.size())));

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= configs.size()) break;
      const std::string tag = configs[i].string();
      const int code = dispatch_exceptions([&] {
        SimulateOptions opt;
        opt.config_path = configs[i].string();
        opt.dt = dt;
        opt.eps = eps;
        opt.seed = seed;
        opt.has_seed = has_seed;
        if (!out_root.empty()) {
          opt.out_dir = (fs::path(out_root) / configs[i].stem()).string();
        }
        modobs::ExperimentConfig cfg = load_with_overrides(opt);
        std::ostringstream os;
        const int rc = run_simulation(cfg, os, tag);
        const std::lock_guard<std::mutex> lock(io_mutex);
        std::cout << os.str();
        return rc;
      });
      int expected = worst.load();
      while (expected < code && !worst.compare_exchange_weak(expected, code)) {
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(worker_count));
  for (int w = 0; w < worker_count; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return worst.load();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modulating-function observer toolkit"};
  app.require_subcommand(1);

  SimulateOptions sim_opt;
  auto* simulate = app.add_subcommand(
      "simulate", "run a configured experiment, write trajectory CSV and summary");
  simulate->add_option("--config", sim_opt.config_path, "experiment config file")
      ->required();
  simulate->add_option("--out", sim_opt.out_dir, "output directory override");
  simulate->add_option("--dt", sim_opt.dt, "integration step override");
  simulate->add_option("--eps", sim_opt.eps, "determinant floor override");
  auto* sim_seed = simulate->add_option("--seed", sim_opt.seed,
                                        "seed for growth-bound sampling");

  int at_n = 2, at_m = 2;
  double at_eps = 0.01, at_t0 = 0.0;
  auto* activation = app.add_subcommand(
      "activation-time", "smallest time past which det T stays above eps");
  activation->add_option("--n", at_n, "system order")->required();
  activation->add_option("--m", at_m, "modulating order")->required();
  activation->add_option("--eps", at_eps, "determinant floor");
  activation->add_option("--t0", at_t0, "start time");

  int cg_n = 2;
  std::vector<double> cg_gain, cg_q_diag;
  double cg_q_scale = 1.0, cg_m0 = 1.0, cg_mu = 0.0, cg_gf = 0.0, cg_gg = 0.0;
  auto* check_gain = app.add_subcommand(
      "check-gain", "Lyapunov certificate and convergence margin for a gain");
  check_gain->add_option("--n", cg_n, "system order")->required();
  check_gain->add_option("--gain", cg_gain, "gain entries")
      ->required()
      ->delimiter(',');
  check_gain->add_option("--q-scale", cg_q_scale, "Q = scale * I");
  check_gain->add_option("--q-diag", cg_q_diag, "diagonal Q entries")
      ->delimiter(',');
  check_gain->add_option("--m0", cg_m0, "modulating sup bound");
  check_gain->add_option("--input-bound", cg_mu, "input bound");
  check_gain->add_option("--gamma-f", cg_gf, "drift growth constant");
  check_gain->add_option("--gamma-g", cg_gg, "input-gain growth constant");

  int vm_m = 2, vm_points = 200;
  double vm_t0 = 0.0, vm_tmax = 10.0;
  std::vector<double> vm_times;
  auto* validate_mf = app.add_subcommand(
      "validate-mf", "check the defining modulating-function properties on a grid");
  validate_mf->add_option("--m", vm_m, "modulating order")->required();
  validate_mf->add_option("--t0", vm_t0, "start time");
  validate_mf->add_option("--t-max", vm_tmax, "grid length past t0");
  validate_mf->add_option("--points", vm_points, "uniform grid intervals");
  validate_mf->add_option("--times", vm_times, "extra grid points")
      ->delimiter(',');

  std::string batch_list, batch_out;
  int batch_jobs = 1;
  double batch_dt = 0.0, batch_eps = 0.0;
  std::uint64_t batch_seed = 0;
  auto* batch = app.add_subcommand(
      "batch", "run every experiment config listed in a file");
  batch->add_option("--config", batch_list, "file listing one config per line")
      ->required();
  batch->add_option("--jobs", batch_jobs, "parallel experiments");
  batch->add_option("--out", batch_out, "root output directory");
  batch->add_option("--dt", batch_dt, "integration step override");
  batch->add_option("--eps", batch_eps, "determinant floor override");
  auto* batch_seed_opt =
      batch->add_option("--seed", batch_seed, "seed for growth-bound sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  if (simulate->parsed()) {
    sim_opt.has_seed = sim_seed->count() > 0;
    return dispatch_exceptions([&] { return cmd_simulate(sim_opt); });
  }
  if (activation->parsed()) {
    return dispatch_exceptions(
        [&] { return cmd_activation_time(at_n, at_m, at_eps, at_t0); });
  }
  if (check_gain->parsed()) {
    return dispatch_exceptions([&] {
      return cmd_check_gain(cg_n, cg_gain, cg_q_scale, cg_q_diag, cg_m0, cg_mu,
                            cg_gf, cg_gg);
    });
  }
  if (validate_mf->parsed()) {
    return dispatch_exceptions([&] {
      return cmd_validate_mf(vm_m, vm_t0, vm_tmax, vm_points, vm_times);
    });
  }
  if (batch->parsed()) {
    return dispatch_exceptions([&] {
      return cmd_batch(batch_list, batch_jobs, batch_out, batch_dt, batch_eps,
                       batch_seed, batch_seed_opt->count() > 0);
    });
  }
  return kExitConfig;
}
