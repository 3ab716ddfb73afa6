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

#include "rglorot/ensemble.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rglorot/random.hpp"
#include "rglorot/spectral.hpp"

namespace rglorot {

std::string to_string(ScalarField field) { return field.is_real() ? "real" : "complex"; }

ScalarField parse_field(const std::string& text) {
  if (text == "real") return ScalarField::real();
  if (text == "complex") return ScalarField::complex();
  throw std::invalid_argument("unknown field '" + text + "' (expected real|complex)");
}

double rho_n(long long n) {
  if (n < 2) throw std::domain_error("rho_n: n must be >= 2");
  const double nd = static_cast<double>(n);
  const double ln = std::log(nd);
  return std::log(nd / (2.0 * std::numbers::pi * ln * ln));
}

double gumbel_cdf(double x, ScalarField field) {
  const double c = 1.0 - 0.5 * field.delta_r();
  return std::exp(-c * std::exp(-x));
}

double gumbel_quantile(double p, ScalarField field) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("gumbel_quantile: p must lie in (0, 1)");
  const double c = 1.0 - 0.5 * field.delta_r();
  return -std::log(-std::log(p) / c);
}

double default_ap(ScalarField field) {
  return kEulerGamma - field.delta_r() * std::numbers::ln2 + std::numbers::pi / std::sqrt(6.0);
}

double rescale_factor(long long n, ScalarField /*field*/, double a_p) {
  const double rho = rho_n(n);
  if (rho <= 0.0) {
    throw std::domain_error("width too small for asymptotic rescaling (rho_n(" + std::to_string(n) +
                            ") = " + std::to_string(rho) + " <= 0)");
  }
  const double nd = static_cast<double>(n);
  return 1.0 + std::sqrt(rho / (4.0 * nd)) + a_p / std::sqrt(4.0 * rho * nd);
}

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::Glorot: return "glorot";
    case EnsembleKind::GlorotHalf: return "glorot-half";
    case EnsembleKind::Rescaled: return "rescaled";
    case EnsembleKind::DiagFromDense: return "diag-from-dense";
    case EnsembleKind::DiagUniformCircle: return "diag-uniform-circle";
    case EnsembleKind::DiagUniformDisk: return "diag-uniform-disk";
  }
  return "unknown";
}

EnsembleKind parse_ensemble(const std::string& text) {
  for (auto kind : {EnsembleKind::Glorot, EnsembleKind::GlorotHalf, EnsembleKind::Rescaled,
                    EnsembleKind::DiagFromDense, EnsembleKind::DiagUniformCircle, EnsembleKind::DiagUniformDisk}) {
    if (text == to_string(kind)) return kind;
  }
  throw std::invalid_argument("unknown ensemble '" + text + "'");
}

bool is_diagonal(EnsembleKind kind) {
  return kind == EnsembleKind::DiagFromDense || kind == EnsembleKind::DiagUniformCircle ||
         kind == EnsembleKind::DiagUniformDisk;
}

void EnsembleSpec::validate() const {
  if (n < 2) throw std::domain_error("ensemble width n must be >= 2");
  if ((kind == EnsembleKind::DiagUniformCircle || kind == EnsembleKind::DiagUniformDisk) && field.is_real()) {
    throw std::domain_error(to_string(kind) + " requires the complex field");
  }
  if (kind == EnsembleKind::DiagFromDense && is_diagonal(dense_source)) {
    throw std::domain_error("diag-from-dense needs a dense source ensemble");
  }
  if (a_p && !std::isfinite(*a_p)) throw std::domain_error("a_p must be finite");
  const bool uses_rescale =
      kind == EnsembleKind::Rescaled || (kind == EnsembleKind::DiagFromDense && dense_source == EnsembleKind::Rescaled);
  if (uses_rescale) rescale_factor(n, field, resolved_ap());
}

double EnsembleSpec::resolved_ap() const { return a_p.value_or(default_ap(field)); }

double EnsembleSpec::entry_divisor() const {
  switch (kind) {
    case EnsembleKind::GlorotHalf: return std::numbers::sqrt2;
    case EnsembleKind::Rescaled: return rescale_factor(n, field, resolved_ap());
    default: return 1.0;
  }
}

SquareMatrix::SquareMatrix(MatrixXc entries, bool real_valued)
    : entries_(std::move(entries)), real_valued_(real_valued) {
  if (entries_.rows() != entries_.cols()) throw std::domain_error("SquareMatrix: matrix is not square");
  if (!entries_.allFinite()) throw std::domain_error("SquareMatrix: non-finite entry");
  if (real_valued_ && !entries_.imag().isZero(0.0)) {
    throw std::domain_error("SquareMatrix: real-valued flag with nonzero imaginary part");
  }
}

SquareMatrix SquareMatrix::diagonal(const VectorXc& diag) {
  MatrixXc m = MatrixXc::Zero(diag.size(), diag.size());
  m.diagonal() = diag;
  SquareMatrix out(std::move(m), diag.imag().isZero(0.0));
  out.diagonal_ = true;
  return out;
}

SquareMatrix SquareMatrix::scaled(double factor) const {
  SquareMatrix out = *this;
  out.entries_ *= factor;
  return out;
}

std::uint64_t matrix_stream(std::uint64_t trial) { return stream_id(StreamTag::Matrix, trial); }

namespace {

SquareMatrix sample_dense(const EnsembleSpec& spec, std::uint64_t stream) {
  RandomStream rng(spec.seed, stream);
  const auto n = static_cast<Eigen::Index>(spec.n);
  const double nd = static_cast<double>(spec.n);
  MatrixXc w(n, n);
  if (spec.field.is_real()) {
    const double scale = 1.0 / std::sqrt(nd);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i) w(i, j) = Complex(rng.normal() * scale, 0.0);
  } else {
    // (Z1 + i Z2)/sqrt(2) with Z ~ N(0, 1/n).
    const double scale = 1.0 / std::sqrt(2.0 * nd);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        w(i, j) = Complex(re * scale, im * scale);
      }
  }
  // Post-division keeps Rescaled and GlorotHalf bit-identical to Glorot / divisor.
  // Real and imaginary parts are divided separately; a vectorized complex
  // division would round differently.
  const double divisor = spec.entry_divisor();
  if (divisor != 1.0) {
    double* raw = reinterpret_cast<double*>(w.data());
    for (Eigen::Index i = 0; i < 2 * w.size(); ++i) raw[i] /= divisor;
  }
  return SquareMatrix(std::move(w), spec.field.is_real());
}

}  // namespace

SquareMatrix sample(const EnsembleSpec& spec) { return sample(spec, matrix_stream(0)); }

SquareMatrix sample(const EnsembleSpec& spec, std::uint64_t stream) {
  spec.validate();
  const auto n = static_cast<Eigen::Index>(spec.n);
  switch (spec.kind) {
    case EnsembleKind::Glorot:
    case EnsembleKind::GlorotHalf:
    case EnsembleKind::Rescaled:
      return sample_dense(spec, stream);

    case EnsembleKind::DiagFromDense: {
      EnsembleSpec dense = spec;
      dense.kind = spec.dense_source;
      const SpectrumResult spectrum = eigenvalues(sample_dense(dense, stream));
      VectorXc diag(n);
      for (Eigen::Index i = 0; i < n; ++i) diag(i) = spectrum.eigenvalues[static_cast<std::size_t>(i)];
      return SquareMatrix::diagonal(diag);
    }

    case EnsembleKind::DiagUniformCircle: {
      RandomStream rng(spec.seed, stream);
      VectorXc diag(n);
      for (Eigen::Index i = 0; i < n; ++i) diag(i) = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
      return SquareMatrix::diagonal(diag);
    }

    case EnsembleKind::DiagUniformDisk: {
      RandomStream rng(spec.seed, stream);
      VectorXc diag(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        const double radius = std::sqrt(rng.uniform());
        diag(i) = std::polar(radius, 2.0 * std::numbers::pi * rng.uniform());
      }
      return SquareMatrix::diagonal(diag);
    }
  }
  throw std::domain_error("sample: unknown ensemble kind");
}

}  // namespace rglorot
