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

#include "modobs/experiment_config.hpp"

#include <filesystem>
#include <vector>

#include "modobs/errors.hpp"
#include "modobs/key_value.hpp"

namespace modobs {

namespace {

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = v[i];
  }
  return out;
}

Eigen::VectorXd get_vector(const KeyValueFile& kv, const std::string& key,
                           int expected, const char* what) {
  const Eigen::VectorXd v = to_vector(kv.get_double_list(key));
  if (v.size() != expected) {
    throw ConfigError(kv.path(), kv.line_of(key),
                      std::string(what) + " must have " +
                          std::to_string(expected) + " entries, got " +
                          std::to_string(v.size()));
  }
  return v;
}

InputSignal parse_input(const KeyValueFile& kv) {
  const std::string kind = kv.get_string("simulation.input", "constant");
  if (kind == "constant") {
    return InputSignal::constant(kv.get_double("simulation.input_value", 0.0));
  }
  if (kind == "step") {
    return InputSignal::step(kv.get_double("simulation.input_value_before", 0.0),
                             kv.get_double("simulation.input_value", 0.0),
                             kv.get_double("simulation.input_step_time", 0.0));
  }
  if (kind == "sine") {
    return InputSignal::sine(kv.get_double("simulation.input_offset", 0.0),
                             kv.get_double("simulation.input_amplitude", 0.0),
                             kv.get_double("simulation.input_omega", 0.0),
                             kv.get_double("simulation.input_phase", 0.0));
  }
  throw ConfigError(kv.path(), kv.line_of("simulation.input"),
                    "unknown input kind '" + kind +
                        "' (expected constant, step or sine)");
}

}  // namespace

ExperimentConfig load_experiment_config(const std::string& path) {
  const KeyValueFile kv = KeyValueFile::load(path);
  ExperimentConfig cfg;
  cfg.source_path = path;

  cfg.plant_type = kv.get_string("plant.type");
  if (cfg.plant_type != "chain" && cfg.plant_type != "tanks") {
    throw ConfigError(kv.path(), kv.line_of("plant.type"),
                      "unknown plant type '" + cfg.plant_type +
                          "' (expected chain or tanks)");
  }
  cfg.n = kv.get_int("plant.n");
  if (cfg.n < 1) {
    throw ConfigError(kv.path(), kv.line_of("plant.n"), "plant order must be >= 1");
  }
  cfg.input_bound = kv.get_double("plant.input_bound", 0.0);

  if (cfg.plant_type == "tanks") {
    if (cfg.n != 2) {
      throw ConfigError(kv.path(), kv.line_of("plant.n"),
                        "the tanks plant has order 2");
    }
    const std::string raw = kv.get_string("plant.params");
    std::filesystem::path p(raw);
    if (p.is_relative()) {
      p = std::filesystem::path(path).parent_path() / p;
    }
    if (!std::filesystem::exists(p)) {
      throw ConfigError(kv.path(), kv.line_of("plant.params"),
                        "parameter file '" + p.string() + "' does not exist");
    }
    cfg.params_path = p.string();
  }

  cfg.bounds.gamma_f = kv.get_double("plant.gamma_f", 0.0);
  cfg.bounds.delta_f = kv.get_double("plant.delta_f", 0.0);
  cfg.bounds.gamma_g = kv.get_double("plant.gamma_g", 0.0);
  cfg.bounds.delta_g = kv.get_double("plant.delta_g", 0.0);
  cfg.estimate_bounds = kv.get_bool("plant.estimate_lipschitz", false);
  if (cfg.estimate_bounds) {
    cfg.bounds_region.lo =
        get_vector(kv, "plant.lipschitz_region_min", cfg.n, "region minimum");
    cfg.bounds_region.hi =
        get_vector(kv, "plant.lipschitz_region_max", cfg.n, "region maximum");
    cfg.bounds_samples = kv.get_int("plant.lipschitz_samples", 200);
  }
  cfg.seed = static_cast<std::uint64_t>(kv.get_double("plant.seed", 12345.0));

  cfg.m = kv.get_int("modulating.m");
  cfg.t0 = kv.get_double("modulating.t0", 0.0);
  if (cfg.m < cfg.n) {
    throw ConfigError(kv.path(), kv.line_of("modulating.m"),
                      "modulating order m = " + std::to_string(cfg.m) +
                          " must be >= the plant order n = " +
                          std::to_string(cfg.n));
  }

  cfg.eps = kv.get_double("transform.eps", 0.01);
  if (!(cfg.eps > 0.0) || !(cfg.eps < 1.0)) {
    throw ConfigError(kv.path(), kv.line_of("transform.eps"),
                      "eps must lie in (0, 1)");
  }
  cfg.mu_floor = kv.get_double("transform.mu_floor", 1e-12);
  if (!(cfg.mu_floor > 0.0)) {
    throw ConfigError(kv.path(), kv.line_of("transform.mu_floor"),
                      "mu_floor must be positive");
  }

  cfg.gain = get_vector(kv, "observer.gain", cfg.n, "gain");
  if (kv.has("observer.q_diag")) {
    const Eigen::VectorXd d = get_vector(kv, "observer.q_diag", cfg.n, "q_diag");
    for (int i = 0; i < cfg.n; ++i) {
      if (!(d(i) > 0.0)) {
        throw ConfigError(kv.path(), kv.line_of("observer.q_diag"),
                          "q_diag entries must be positive");
      }
    }
    cfg.q = d.asDiagonal();
  } else {
    const double scale = kv.get_double("observer.q_scale", 1.0);
    if (!(scale > 0.0)) {
      throw ConfigError(kv.path(), kv.line_of("observer.q_scale"),
                        "q_scale must be positive");
    }
    cfg.q = scale * Eigen::MatrixXd::Identity(cfg.n, cfg.n);
  }
  cfg.nonlinearity_aware = kv.get_bool("observer.nonlinearity_aware", false);
  cfg.xi_hat0 = get_vector(kv, "observer.xi_hat0", cfg.n, "xi_hat0");
  cfg.xi_hat0(0) = 0.0;  // first component is mu(t0) yhat(t0) = 0

  cfg.z0 = get_vector(kv, "simulation.z0", cfg.n, "z0");
  cfg.t_end = kv.get_double("simulation.t_end");
  if (!(cfg.t_end > cfg.t0)) {
    throw ConfigError(kv.path(), kv.line_of("simulation.t_end"),
                      "t_end must exceed t0");
  }
  cfg.dt = kv.get_double("simulation.dt", 1e-3);
  if (!(cfg.dt > 0.0)) {
    throw ConfigError(kv.path(), kv.line_of("simulation.dt"),
                      "dt must be positive");
  }
  cfg.input = parse_input(kv);
  cfg.error_threshold = kv.get_double("simulation.error_threshold", 1e-2);

  cfg.out_dir = kv.get_string("output.dir", "out");
  cfg.prefix = kv.get_string("output.prefix",
                             std::filesystem::path(path).stem().string());
  cfg.require_certificate = kv.get_bool("output.require_certificate", false);

  return cfg;
}

}  // namespace modobs
