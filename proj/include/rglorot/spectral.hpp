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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rglorot/ensemble.hpp"
#include "rglorot/types.hpp"

namespace rglorot {

/// Relative tolerance for calling an eigenvalue of a real matrix real:
/// |Im lambda| <= tol * (1 + |lambda|).
inline constexpr double kRealClassificationTol = 1e-7;

struct SpectrumResult {
  /// Sorted by modulus descending (ties: real part, then imaginary part, descending).
  std::vector<Complex> eigenvalues;
  double radius = 0.0;
  /// Set for real-valued inputs only.
  std::optional<long long> n_real;
  /// Trace-identity backward-error diagnostic:
  /// max(|sum l - tr W| / (n |W|_F), |sum l^2 - tr W^2| / (n |W|_F^2)).
  double residual_max = 0.0;
  bool from_real_matrix = false;
};

/// All eigenvalues of a general square matrix.
///
/// Dense inputs go through LAPACK xGEEV (balancing, Hessenberg reduction,
/// shifted QR); real-valued inputs use the real-arithmetic driver so complex
/// eigenvalues come out as exact conjugate pairs. Diagonal inputs return
/// their diagonal. Throws NumericalError when QR does not converge.
SpectrumResult eigenvalues(const SquareMatrix& w);

struct RealCounts {
  long long n_real = 0;
  long long n_complex = 0;
};

RealCounts classify_real(const SpectrumResult& spectrum, double tol = kRealClassificationTol);

struct RadiusSample {
  std::size_t trial = 0;
  double radius = 0.0;
  bool inside_unit = false;
};

struct TrialFailure {
  std::size_t trial = 0;
  std::string message;
};

struct RadiusSummary {
  std::vector<RadiusSample> samples;  ///< Successful trials in trial order.
  double mean = 0.0;
  double std = 0.0;  ///< Sample standard deviation (n - 1 denominator).
  double frac_inside = 0.0;
  std::vector<TrialFailure> failures;
};

/// Spectral radius of `trials` independent draws; trial i uses matrix
/// stream i, so results do not depend on `threads`. Eigensolver failures
/// drop the trial and are listed in `failures`.
RadiusSummary radius_statistics(const EnsembleSpec& spec, std::size_t trials, unsigned threads = 1);

/// Full spectra of `trials` independent draws (trial order). Throws on the
/// first failing trial.
std::vector<SpectrumResult> sample_spectra(const EnsembleSpec& spec, std::size_t trials, unsigned threads = 1);

/// 1 + sqrt(rho_n / 4n) + (gamma - delta_r ln 2) / sqrt(4 rho_n n).
/// Throws std::domain_error when rho_n(n) <= 0.
double expected_radius_asymptotic(long long n, ScalarField field);

/// Asymptotic P(radius < r) = F_G(sqrt(4 rho_n n) (r - 1 - sqrt(rho_n / 4n))).
double prob_radius_below(long long n, ScalarField field, double r);

/// Kolmogorov-Smirnov distance between the empirical CDF of |lambda| and the
/// radial CDF min(r^2, 1) of the uniform unit disk. Throws on empty input.
double circular_law_distance(std::span<const Complex> pooled);
double circular_law_distance(const std::vector<SpectrumResult>& spectra);

}  // namespace rglorot
