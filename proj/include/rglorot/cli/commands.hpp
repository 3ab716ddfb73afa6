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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rglorot/cli/io.hpp"

namespace rglorot::cli {

struct RadiusHistOptions {
  long long n = 500;
  std::string field = "complex";
  std::string ensemble = "glorot";
  std::size_t trials = 100;
  std::optional<double> a_p;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

/// Shared by matrix-powers (steps = k_max) and hidden-states (steps = t_max).
struct PropagationOptions {
  long long n = 500;
  std::string field = "complex";
  std::string ensemble = "glorot";
  std::optional<double> a_p;
  long long steps = 120;
  std::size_t matrix_trials = 100;
  std::size_t input_trials = 50;
  std::string input_law = "real";
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct MomentBoundOptions {
  long long n = 200;
  long long k_max = 30;
  std::size_t mc_trials = 500;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct RescaleFactorOptions {
  long long n = 500;
  std::string field = "complex";
  std::optional<double> p;
  std::optional<double> a_p;
};

struct RealDensityOptions {
  long long n = 100;
  double x_min = -2.0;
  double x_max = 2.0;
  long long points = 401;
  std::vector<long long> k = {0, 1, 2, 5, 10};
  std::size_t mc_trials = 500;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct AsymptoticsOptions {
  std::vector<double> alpha = {0.0, 1.0, 2.0, 3.0};
  std::vector<long long> n = {10000, 1000000};
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(RadiusHistOptions, n, field, ensemble, trials, a_p, seed, threads)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(PropagationOptions, n, field, ensemble, a_p, steps, matrix_trials,
                                                input_trials, input_law, seed, threads)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(MomentBoundOptions, n, k_max, mc_trials, seed, threads)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(RescaleFactorOptions, n, field, p, a_p)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(RealDensityOptions, n, x_min, x_max, points, k, mc_trials, seed,
                                                threads)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(AsymptoticsOptions, alpha, n)

/// Files written by a command and its JSON summary. `numerical_failure` is
/// set when some trials failed but partial results were still written.
struct CommandResult {
  std::vector<std::filesystem::path> outputs;
  nlohmann::json summary;
  bool numerical_failure = false;
};

// Each command writes <stem>.csv (or <stem>.<part>.csv) and
// <stem>.summary.json. Invalid options throw std::domain_error or
// std::invalid_argument; numerical breakdowns throw NumericalError.

/// CSV `trial,radius,inside_unit`.
CommandResult run_radius_hist(const RadiusHistOptions& o, const std::filesystem::path& stem);
/// CSV `k,mean_log_sq_norm,std_log_sq_norm,trials` for k = 0..steps.
CommandResult run_matrix_powers(const PropagationOptions& o, const std::filesystem::path& stem);
/// CSV `t,mean_log_sq_norm,std_log_sq_norm,bound_log` for t = 1..steps, where
/// t counts inputs absorbed and bound_log = log hidden_state_lower_bound(n, t-1)
/// (complex field; empty otherwise).
CommandResult run_hidden_states(const PropagationOptions& o, const std::filesystem::path& stem);
/// CSV `k,log_bound,mc_mean_log,mc_sem_log,dominates`; mc columns empty when
/// mc_trials = 0.
CommandResult run_moment_bound(const MomentBoundOptions& o, const std::filesystem::path& stem);
/// Summary JSON {rho_n, a_p, p, factor, variance}.
CommandResult run_rescale_factor(const RescaleFactorOptions& o, const std::filesystem::path& stem);
/// <stem>.density.csv `x,density,density_normalized`, <stem>.moments.csv
/// `k,quadrature,mc_mean,mc_sem`, counts in the summary.
CommandResult run_real_density(const RealDensityOptions& o, const std::filesystem::path& stem);
/// CSV `alpha,n,k,exact_log,limit_log,abs_err`.
CommandResult run_asymptotics(const AsymptoticsOptions& o, const std::filesystem::path& stem);

}  // namespace rglorot::cli
