// Copyright 2026 The rglorot Authors
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

#include "rglorot/cli/commands.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "rglorot/ensemble.hpp"
#include "rglorot/moments.hpp"
#include "rglorot/propagation.hpp"
#include "rglorot/realcase.hpp"
#include "rglorot/spectral.hpp"

namespace rglorot::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

fs::path with_suffix(const fs::path& stem, const std::string& suffix) { return fs::path(stem.string() + suffix); }

void emit(CommandResult& r, const fs::path& path, const std::string& content) {
  write_text_file(path, content);
  r.outputs.push_back(path);
}

void emit_summary(CommandResult& r, const fs::path& stem) {
  emit(r, with_suffix(stem, ".summary.json"), r.summary.dump(2) + "\n");
}

EnsembleSpec make_spec(long long n, const std::string& field, const std::string& ensemble,
                       const std::optional<double>& a_p, std::uint64_t seed) {
  EnsembleSpec spec;
  spec.n = n;
  spec.field = parse_field(field);
  spec.kind = parse_ensemble(ensemble);
  spec.a_p = a_p;
  spec.seed = seed;
  spec.validate();
  return spec;
}

std::optional<double> radius_formula(long long n, ScalarField field) {
  if (rho_n(n) <= 0.0) return std::nullopt;
  return expected_radius_asymptotic(n, field);
}

MonteCarloConfig propagation_config(const PropagationOptions& o, PropagationMode mode) {
  if (o.steps < 0) throw std::domain_error("step count must be >= 0");
  MonteCarloConfig cfg;
  cfg.ensemble = make_spec(o.n, o.field, o.ensemble, o.a_p, o.seed);
  cfg.mode = mode;
  cfg.t_max = o.steps;
  cfg.matrix_trials = o.matrix_trials;
  cfg.input_trials = o.input_trials;
  cfg.input_law = parse_input_law(o.input_law);
  cfg.threads = o.threads;
  return cfg;
}

json linear_scale_summary(const TrajectoryStats& stats) {
  json log_mean = json::array(), rel_sem = json::array();
  for (const auto& s : stats.steps) {
    log_mean.push_back(json_number(s.log_mean_sq_norm));
    rel_sem.push_back(json_number(s.rel_sem));
  }
  return {{"log_mean_sq_norm", log_mean}, {"rel_sem", rel_sem}};
}

}  // namespace

CommandResult run_radius_hist(const RadiusHistOptions& o, const fs::path& stem) {
  const EnsembleSpec spec = make_spec(o.n, o.field, o.ensemble, o.a_p, o.seed);
  const RadiusSummary rs = radius_statistics(spec, o.trials, o.threads);

  CsvTable csv({"trial", "radius", "inside_unit"});
  for (const auto& s : rs.samples) csv.add_row({static_cast<long long>(s.trial), s.radius, s.inside_unit});

  CommandResult r;
  emit(r, with_suffix(stem, ".csv"), csv.str());
  const std::optional<double> formula = radius_formula(o.n, spec.field);
  json failures = json::array();
  for (const auto& f : rs.failures) failures.push_back({{"trial", f.trial}, {"message", f.message}});
  r.summary = {
      {"n", o.n},
      {"field", o.field},
      {"ensemble", o.ensemble},
      {"trials", rs.samples.size()},
      {"mean", json_number(rs.mean)},
      {"std", json_number(rs.std)},
      {"frac_inside", json_number(rs.frac_inside)},
      {"expected_radius_asymptotic", json_number(formula)},
      {"entry_divisor", spec.entry_divisor()},
      {"failures", failures},
  };
  r.numerical_failure = !rs.failures.empty();
  emit_summary(r, stem);
  return r;
}

CommandResult run_matrix_powers(const PropagationOptions& o, const fs::path& stem) {
  const TrajectoryStats stats = monte_carlo(propagation_config(o, PropagationMode::MatrixPowers));
  CsvTable csv({"k", "mean_log_sq_norm", "std_log_sq_norm", "trials"});
  for (const auto& s : stats.steps) {
    csv.add_row({s.t, s.mean_log_sq_norm, s.std_log_sq_norm, static_cast<long long>(s.trials)});
  }
  CommandResult r;
  emit(r, with_suffix(stem, ".csv"), csv.str());
  r.summary = linear_scale_summary(stats);
  r.summary["n"] = o.n;
  emit_summary(r, stem);
  return r;
}

CommandResult run_hidden_states(const PropagationOptions& o, const fs::path& stem) {
  const MonteCarloConfig cfg = propagation_config(o, PropagationMode::HiddenStates);
  const TrajectoryStats stats = monte_carlo(cfg);
  CsvTable csv({"t", "mean_log_sq_norm", "std_log_sq_norm", "bound_log"});
  for (const auto& s : stats.steps) {
    CsvCell bound;
    if (!cfg.ensemble.field.is_real()) bound = log_hidden_state_lower_bound(o.n, s.t - 1);
    csv.add_row({s.t, s.mean_log_sq_norm, s.std_log_sq_norm, bound});
  }
  CommandResult r;
  emit(r, with_suffix(stem, ".csv"), csv.str());
  r.summary = linear_scale_summary(stats);
  r.summary["n"] = o.n;
  emit_summary(r, stem);
  return r;
}

CommandResult run_moment_bound(const MomentBoundOptions& o, const fs::path& stem) {
  if (o.k_max < 0) throw std::domain_error("k-max must be >= 0");
  std::optional<TrajectoryStats> stats;
  if (o.mc_trials > 0) {
    MonteCarloConfig cfg;
    cfg.ensemble = make_spec(o.n, "complex", "glorot", std::nullopt, o.seed);
    cfg.mode = PropagationMode::MatrixPowers;
    cfg.t_max = o.k_max;
    cfg.matrix_trials = o.mc_trials;
    cfg.input_trials = 1;
    cfg.threads = o.threads;
    stats = monte_carlo(cfg);
  } else if (o.n < 1) {
    throw std::domain_error("n must be >= 1");
  }

  CsvTable csv({"k", "log_bound", "mc_mean_log", "mc_sem_log", "dominates"});
  bool all = true;
  for (long long k = 0; k <= o.k_max; ++k) {
    const double log_bound = log_moment_lower_bound(o.n, k);
    if (!stats) {
      csv.add_row({k, log_bound, {}, {}, {}});
      continue;
    }
    const StepStats& s = stats->steps[static_cast<std::size_t>(k)];
    // mean >= bound - 3 SEM  <=>  log mean + log(1 + 3 SEM/mean) >= log bound
    const bool dominates = s.log_mean_sq_norm + std::log1p(3.0 * s.rel_sem) >= log_bound;
    all = all && dominates;
    csv.add_row({k, log_bound, s.log_mean_sq_norm, s.rel_sem, dominates});
  }
  CommandResult r;
  emit(r, with_suffix(stem, ".csv"), csv.str());
  r.summary = {{"n", o.n}, {"k_max", o.k_max}, {"mc_trials", o.mc_trials}};
  r.summary["all_dominate"] = stats ? json(all) : json(nullptr);
  emit_summary(r, stem);
  return r;
}

CommandResult run_rescale_factor(const RescaleFactorOptions& o, const fs::path& stem) {
  if (o.p && o.a_p) throw std::invalid_argument("give at most one of --p and --a-p");
  const ScalarField field = parse_field(o.field);
  const double a_p = o.a_p ? *o.a_p : o.p ? gumbel_quantile(*o.p, field) : default_ap(field);
  const double s = rescale_factor(o.n, field, a_p);
  CommandResult r;
  r.summary = {
      {"n", o.n},
      {"field", o.field},
      {"rho_n", rho_n(o.n)},
      {"a_p", a_p},
      {"p", gumbel_cdf(a_p, field)},
      {"factor", s},
      {"variance", 1.0 / (static_cast<double>(o.n) * s * s)},
  };
  emit_summary(r, stem);
  return r;
}

CommandResult run_real_density(const RealDensityOptions& o, const fs::path& stem) {
  if (o.n < 2) throw std::domain_error("n must be >= 2");
  if (o.points < 2 || !(o.x_min < o.x_max)) throw std::domain_error("density grid needs points >= 2 and x-min < x-max");
  for (long long k : o.k) {
    if (k < 0) throw std::domain_error("moment orders must be >= 0");
  }
  if (o.mc_trials == 1) throw std::domain_error("mc-trials must be 0 or >= 2");

  const ExpectedCounts counts = expected_counts(o.n);
  CsvTable density({"x", "density", "density_normalized"});
  for (long long i = 0; i < o.points; ++i) {
    const double x = o.x_min + (o.x_max - o.x_min) * static_cast<double>(i) / static_cast<double>(o.points - 1);
    const double d = real_eig_density_unnorm(o.n, x);
    density.add_row({x, d, d / counts.c_real});
  }

  std::optional<RealCaseMonteCarlo> mc;
  if (o.mc_trials >= 2) mc = real_case_monte_carlo(o.n, o.k, o.mc_trials, o.seed, o.threads);
  CsvTable moments({"k", "quadrature", "mc_mean", "mc_sem"});
  for (std::size_t i = 0; i < o.k.size(); ++i) {
    const double q = real_case_moment(o.n, o.k[i]);
    if (mc) {
      moments.add_row({o.k[i], q, mc->moments[i].mean, mc->moments[i].sem});
    } else {
      moments.add_row({o.k[i], q, {}, {}});
    }
  }

  CommandResult r;
  emit(r, with_suffix(stem, ".density.csv"), density.str());
  emit(r, with_suffix(stem, ".moments.csv"), moments.str());
  const json count_json = {{"c_real", counts.c_real}, {"c_complex", counts.c_complex}, {"sum", counts.sum()}};
  emit(r, with_suffix(stem, ".counts.json"), count_json.dump(2) + "\n");
  r.summary = count_json;
  r.summary["n"] = o.n;
  r.summary["mc_trials"] = o.mc_trials;
  r.summary["mc_real_count"] = mc ? json(mc->mean_real_count) : json(nullptr);
  r.summary["mc_real_count_sem"] = mc ? json(mc->sem_real_count) : json(nullptr);
  emit_summary(r, stem);
  return r;
}

CommandResult run_asymptotics(const AsymptoticsOptions& o, const fs::path& stem) {
  CsvTable csv({"alpha", "n", "k", "exact_log", "limit_log", "abs_err"});
  json decreasing = json::object();
  for (double alpha : o.alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw std::domain_error("alpha must be finite and >= 0");
    double previous = std::numeric_limits<double>::infinity();
    bool monotone = true;
    for (long long n : o.n) {
      if (n < 1) throw std::domain_error("n must be >= 1");
      const auto k = static_cast<long long>(std::ceil(alpha * std::sqrt(static_cast<double>(n))));
      const double exact = log_factorial_ratio(n, k);
      const double limit = 0.5 * alpha * alpha;
      const double err = std::abs(exact - limit);
      csv.add_row({alpha, n, k, exact, limit, err});
      if (alpha > 0.0 && !(err < previous)) monotone = false;
      previous = err;
    }
    decreasing[format_double(alpha)] = monotone;
  }
  CommandResult r;
  emit(r, with_suffix(stem, ".csv"), csv.str());
  r.summary = {{"abs_err_decreasing_in_n", decreasing}};
  emit_summary(r, stem);
  return r;
}

}  // namespace rglorot::cli
