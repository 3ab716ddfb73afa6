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
#include <optional>
#include <string>

#include "rglorot/types.hpp"

namespace rglorot {

// ---------------------------------------------------------------------------
// Deterministic scale factors and Gumbel edge statistics.
// ---------------------------------------------------------------------------

/// Logarithmic edge correction log(n / (2*pi*(log n)^2)).
///
/// Negative for n below roughly 160; the asymptotic radius formulas
/// (rescale_factor, expected_radius_asymptotic, prob_radius_below) need a
/// positive value and reject smaller widths. Requires n >= 2.
double rho_n(long long n);

/// Gumbel CDF of the limiting radius fluctuation: exp(-(1 - delta_r/2) e^{-x}).
double gumbel_cdf(double x, ScalarField field);

/// Inverse of gumbel_cdf. Throws std::domain_error unless 0 < p < 1.
double gumbel_quantile(double p, ScalarField field);

/// Gumbel mean plus one standard deviation: gamma - delta_r ln 2 + pi/sqrt(6).
double default_ap(ScalarField field);

/// s = 1 + sqrt(rho_n / 4n) + a_p / sqrt(4 rho_n n). Rescaled entries are
/// Glorot entries divided by s. Throws std::domain_error when rho_n(n) <= 0.
double rescale_factor(long long n, ScalarField field, double a_p);

// ---------------------------------------------------------------------------
// Ensembles.
// ---------------------------------------------------------------------------

enum class EnsembleKind {
  Glorot,             ///< i.i.d. N(0, 1/n) entries (complex: variance split over re/im).
  GlorotHalf,         ///< Glorot with variance 1/(2n).
  Rescaled,           ///< Glorot divided by rescale_factor.
  DiagFromDense,      ///< Diagonal of eigenvalues of a dense sample.
  DiagUniformCircle,  ///< Diagonal e^{i theta}, theta uniform. Complex only.
  DiagUniformDisk,    ///< Diagonal uniform on the unit disk. Complex only.
};

std::string to_string(EnsembleKind kind);
/// Accepts the kebab-case names printed by to_string.
EnsembleKind parse_ensemble(const std::string& text);

bool is_diagonal(EnsembleKind kind);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::Glorot;
  ScalarField field = ScalarField::complex();
  long long n = 2;
  /// Gumbel offset for Rescaled; default_ap(field) when unset.
  std::optional<double> a_p;
  std::uint64_t seed = 0;
  /// Dense ensemble whose eigenvalues feed DiagFromDense (Glorot, GlorotHalf
  /// or Rescaled).
  EnsembleKind dense_source = EnsembleKind::Glorot;

  /// Throws std::domain_error when these settings violate an invariant.
  void validate() const;
  double resolved_ap() const;
  /// Entry divisor applied to raw Glorot draws: 1, sqrt(2) or s.
  double entry_divisor() const;
};

/// Dense n x n recurrent weight matrix. Real-ensemble samples keep exactly
/// zero imaginary parts and are flagged, so the eigensolver can use real
/// arithmetic and report conjugate pairs.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(MatrixXc entries, bool real_valued);

  static SquareMatrix diagonal(const VectorXc& diag);

  long long n() const { return entries_.rows(); }
  const MatrixXc& entries() const { return entries_; }
  bool real_valued() const { return real_valued_; }
  bool is_diagonal() const { return diagonal_; }
  VectorXc diagonal_entries() const { return entries_.diagonal(); }

  Eigen::MatrixXd real_part() const { return entries_.real(); }

  SquareMatrix scaled(double factor) const;

 private:
  MatrixXc entries_;
  bool real_valued_ = false;
  bool diagonal_ = false;
};

/// Draws one matrix of the ensemble from the stream (spec.seed, stream).
///
/// Raw draws fill the matrix column by column; complex entries consume the
/// real then the imaginary standard normal. Every dense kind reuses the same
/// raw draws, so Rescaled(seed) == Glorot(seed) / s entrywise. The stream
/// defaults to the matrix stream of trial 0.
SquareMatrix sample(const EnsembleSpec& spec);
SquareMatrix sample(const EnsembleSpec& spec, std::uint64_t stream);

/// Matrix stream used for Monte-Carlo trial `trial`.
std::uint64_t matrix_stream(std::uint64_t trial);

}  // namespace rglorot
