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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rglorot/ensemble.hpp"
#include "rglorot/random.hpp"
#include "rglorot/types.hpp"

namespace rglorot {

/// h = exp(log_scale) * direction with |direction| = 1, or the exact zero
/// state (direction empty of mass, log_scale = 0, zero = true).
struct LogScaledState {
  VectorXc direction;
  double log_scale = 0.0;
  bool zero = true;

  static LogScaledState zeros(long long n);
  static LogScaledState from_vector(const VectorXc& h);
  /// log |h|; -inf for the zero state.
  double log_norm() const;
  /// Linear-domain value; overflows once log_scale exceeds ~709.
  VectorXc to_vector() const;
};

/// log |W^k x| for k = 0..k_max via y_{k+1} = W y_k with per-step
/// renormalization. A zero x (or a product that hits zero) yields -inf.
std::vector<double> matrix_power_norms(const SquareMatrix& w, const VectorXc& x, long long k_max);

/// log |h_t| for t = 1..T of h_t = W h_{t-1} + x_t, h_0 = 0.
/// Throws std::domain_error on a dimension mismatch.
std::vector<double> hidden_state_trajectory(const SquareMatrix& w, const std::vector<VectorXc>& inputs);

/// hidden_state_trajectory for W = diag(d), O(n) per step.
std::vector<double> diagonal_trajectory(const VectorXc& diag, const std::vector<VectorXc>& inputs);

enum class InputLaw {
  Real,     ///< x ~ N(0, I_n), real.
  Complex,  ///< x = (z1 + i z2)/sqrt(2), E|x|^2 = n.
};
std::string to_string(InputLaw law);
InputLaw parse_input_law(const std::string& text);

enum class PropagationMode {
  MatrixPowers,  ///< steps k = 0..t_max of |W^k x|.
  HiddenStates,  ///< steps t = 1..t_max of |h_t|.
};

/// Stream feeding the inputs of (matrix trial, input trial).
std::uint64_t input_stream(std::uint64_t matrix_trial, std::uint64_t input_trial);

/// Next input vector of length n drawn from `rng` under `law`.
VectorXc draw_input(RandomStream& rng, long long n, InputLaw law);

struct MonteCarloConfig {
  EnsembleSpec ensemble;
  PropagationMode mode = PropagationMode::HiddenStates;
  long long t_max = 0;
  std::size_t matrix_trials = 1;
  std::size_t input_trials = 1;
  InputLaw input_law = InputLaw::Real;
  unsigned threads = 1;
};

/// Statistics of one step over all (matrix, input) trajectories. Mean and
/// std are taken over log |.|^2 (std with the n-1 denominator; 0 for a single
/// trajectory). The linear-scale mean of |.|^2 is kept in log form together
/// with its relative standard error.
struct StepStats {
  long long t = 0;
  double mean_log_sq_norm = 0.0;
  double std_log_sq_norm = 0.0;
  double log_mean_sq_norm = 0.0;
  double rel_sem = 0.0;
  std::size_t trials = 0;
};

struct TrajectoryStats {
  std::vector<StepStats> steps;
};

/// Matrix trial m samples W from matrix_stream(m); input trial j of matrix m
/// draws its inputs from input_stream(m, j). Glorot and Rescaled configs with
/// the same seed therefore see identical raw draws. Results are reduced in
/// trial order and do not depend on `threads`.
TrajectoryStats monte_carlo(const MonteCarloConfig& config);

/// Raw per-trajectory log norms, indexed [(m * input_trials + j) * steps + s].
std::vector<double> monte_carlo_log_norms(const MonteCarloConfig& config);

}  // namespace rglorot
