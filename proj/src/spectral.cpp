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

#include "rglorot/spectral.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rglorot/parallel.hpp"

namespace rglorot {

namespace {

bool modulus_order(const Complex& a, const Complex& b) {
  const double ma = std::abs(a);
  const double mb = std::abs(b);
  if (ma != mb) return ma > mb;
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

std::vector<Complex> real_geev(const SquareMatrix& w) {
  const auto n = static_cast<lapack_int>(w.n());
  Eigen::MatrixXd a = w.real_part();
  std::vector<double> wr(static_cast<std::size_t>(n)), wi(static_cast<std::size_t>(n));
  const lapack_int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, wr.data(), wi.data(),
                                        nullptr, 1, nullptr, 1);
  if (info < 0) throw std::logic_error("dgeev: illegal argument " + std::to_string(-info));
  if (info > 0) {
    throw NumericalError("eigenvalues: real QR iteration did not converge (n=" + std::to_string(n) +
                         ", first " + std::to_string(info) + " eigenvalues not computed)");
  }
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Complex(wr[i], wi[i]);
  return out;
}

std::vector<Complex> complex_geev(const SquareMatrix& w) {
  const auto n = static_cast<lapack_int>(w.n());
  MatrixXc a = w.entries();
  std::vector<Complex> out(static_cast<std::size_t>(n));
  const lapack_int info =
      LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, reinterpret_cast<lapack_complex_double*>(a.data()), n,
                    reinterpret_cast<lapack_complex_double*>(out.data()), nullptr, 1, nullptr, 1);
  if (info < 0) throw std::logic_error("zgeev: illegal argument " + std::to_string(-info));
  if (info > 0) {
    throw NumericalError("eigenvalues: complex QR iteration did not converge (n=" + std::to_string(n) +
                         ", first " + std::to_string(info) + " eigenvalues not computed)");
  }
  return out;
}

double trace_residual(const MatrixXc& w, const std::vector<Complex>& lambda) {
  const double n = static_cast<double>(w.rows());
  const double fro = w.norm();
  if (fro == 0.0) return 0.0;
  Complex sum1 = 0.0, sum2 = 0.0;
  for (const Complex& l : lambda) {
    sum1 += l;
    sum2 += l * l;
  }
  // tr(W^2) = sum_ij W_ij W_ji without forming W^2.
  const Complex tr1 = w.trace();
  const Complex tr2 = w.cwiseProduct(w.transpose()).sum();
  return std::max(std::abs(sum1 - tr1) / (n * fro), std::abs(sum2 - tr2) / (n * fro * fro));
}

}  // namespace

SpectrumResult eigenvalues(const SquareMatrix& w) {
  if (w.n() == 0) throw std::domain_error("eigenvalues: empty matrix");
  if (!w.entries().allFinite()) throw std::domain_error("eigenvalues: non-finite entries");
  pin_blas_threads();

  SpectrumResult result;
  result.from_real_matrix = w.real_valued();
  if (w.is_diagonal()) {
    const VectorXc d = w.diagonal_entries();
    result.eigenvalues.assign(d.data(), d.data() + d.size());
  } else {
    result.eigenvalues = w.real_valued() ? real_geev(w) : complex_geev(w);
  }
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end(), modulus_order);
  result.radius = std::abs(result.eigenvalues.front());
  result.residual_max = w.is_diagonal() ? 0.0 : trace_residual(w.entries(), result.eigenvalues);
  if (w.real_valued()) result.n_real = classify_real(result).n_real;
  return result;
}

RealCounts classify_real(const SpectrumResult& spectrum, double tol) {
  RealCounts counts;
  for (const Complex& l : spectrum.eigenvalues) {
    if (std::abs(l.imag()) <= tol * (1.0 + std::abs(l))) {
      ++counts.n_real;
    } else {
      ++counts.n_complex;
    }
  }
  return counts;
}

RadiusSummary radius_statistics(const EnsembleSpec& spec, std::size_t trials, unsigned threads) {
  if (trials < 1) throw std::domain_error("radius_statistics: trials must be >= 1");
  spec.validate();

  std::vector<std::optional<double>> radii(trials);
  std::vector<std::string> errors(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    try {
      radii[i] = eigenvalues(sample(spec, matrix_stream(i))).radius;
    } catch (const NumericalError& e) {
      errors[i] = e.what();
    }
  });

  RadiusSummary summary;
  for (std::size_t i = 0; i < trials; ++i) {
    if (radii[i]) {
      summary.samples.push_back({i, *radii[i], *radii[i] < 1.0});
    } else {
      summary.failures.push_back({i, errors[i]});
    }
  }
  const auto m = static_cast<double>(summary.samples.size());
  if (summary.samples.empty()) return summary;
  double sum = 0.0;
  std::size_t inside = 0;
  for (const auto& s : summary.samples) {
    sum += s.radius;
    inside += s.inside_unit ? 1 : 0;
  }
  summary.mean = sum / m;
  double ss = 0.0;
  for (const auto& s : summary.samples) ss += (s.radius - summary.mean) * (s.radius - summary.mean);
  summary.std = summary.samples.size() > 1 ? std::sqrt(ss / (m - 1.0)) : 0.0;
  summary.frac_inside = static_cast<double>(inside) / m;
  return summary;
}

std::vector<SpectrumResult> sample_spectra(const EnsembleSpec& spec, std::size_t trials, unsigned threads) {
  spec.validate();
  std::vector<SpectrumResult> out(trials);
  parallel_for(trials, threads, [&](std::size_t i) { out[i] = eigenvalues(sample(spec, matrix_stream(i))); });
  return out;
}

double expected_radius_asymptotic(long long n, ScalarField field) {
  const double rho = rho_n(n);
  if (rho <= 0.0) throw std::domain_error("expected_radius_asymptotic: rho_n(n) <= 0 for n=" + std::to_string(n));
  const double nd = static_cast<double>(n);
  return 1.0 + std::sqrt(rho / (4.0 * nd)) +
         (kEulerGamma - field.delta_r() * std::numbers::ln2) / std::sqrt(4.0 * rho * nd);
}

double prob_radius_below(long long n, ScalarField field, double r) {
  const double rho = rho_n(n);
  if (rho <= 0.0) throw std::domain_error("prob_radius_below: rho_n(n) <= 0 for n=" + std::to_string(n));
  if (std::isinf(r)) return r > 0 ? 1.0 : 0.0;
  const double nd = static_cast<double>(n);
  return gumbel_cdf(std::sqrt(4.0 * rho * nd) * (r - 1.0 - std::sqrt(rho / (4.0 * nd))), field);
}

double circular_law_distance(std::span<const Complex> pooled) {
  if (pooled.empty()) throw std::domain_error("circular_law_distance: no eigenvalues");
  std::vector<double> r(pooled.size());
  std::transform(pooled.begin(), pooled.end(), r.begin(), [](const Complex& l) { return std::abs(l); });
  std::sort(r.begin(), r.end());
  const double m = static_cast<double>(r.size());
  double ks = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double f = std::min(r[i] * r[i], 1.0);
    ks = std::max({ks, static_cast<double>(i + 1) / m - f, f - static_cast<double>(i) / m});
  }
  return ks;
}

double circular_law_distance(const std::vector<SpectrumResult>& spectra) {
  std::vector<Complex> pooled;
  for (const auto& s : spectra) pooled.insert(pooled.end(), s.eigenvalues.begin(), s.eigenvalues.end());
  return circular_law_distance(pooled);
}

}  // namespace rglorot
