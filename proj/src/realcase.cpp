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

#include "rglorot/realcase.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rglorot/ensemble.hpp"
#include "rglorot/parallel.hpp"
#include "rglorot/quadrature.hpp"
#include "rglorot/special.hpp"
#include "rglorot/spectral.hpp"
#include "rglorot/types.hpp"

namespace rglorot {

namespace {

constexpr double kTailFraction = 1e-8;

void require_n(const char* what, long long n) {
  if (n < 2) throw std::domain_error(std::string(what) + ": n must be >= 2");
}

double truncation_radius(long long n) { return 1.0 + 10.0 / std::sqrt(static_cast<double>(n)); }

double pow_2k(double r2, long long k) { return k == 0 ? 1.0 : std::pow(r2, static_cast<double>(k)); }

// Weighted integrals of the two densities over a radial shell [r0, r1].
// The real axis uses symmetry in x; the complex part runs in polar
// coordinates over the first quadrant and is doubled for x < 0.
double real_part_integral(long long n, long long k, double r0, double r1) {
  QuadratureOptions opt;
  opt.rel_tol = 1e-11;
  const auto f = [&](double x) { return pow_2k(x * x, k) * real_eig_density_unnorm(n, x); };
  return 2.0 * integrate(f, r0, r1, opt).value;
}

double complex_part_integral(long long n, long long k, double r0, double r1) {
  QuadratureOptions opt;
  opt.rel_tol = 1e-10;
  const auto f = [&](double theta, double r) {
    const double y = r * std::sin(theta);
    if (y <= 0.0) return 0.0;
    return r * pow_2k(r * r, k) * complex_eig_density_unnorm(n, r * std::cos(theta), y);
  };
  // Upper half-plane = 2 x first quadrant; all eigenvalues = 2 x upper half-plane.
  return 4.0 * integrate_2d(f, 0.0, 0.5 * std::numbers::pi, r0, r1, opt).value;
}

void check_tail(const char* what, long long n, double body, double tail) {
  if (tail > kTailFraction * std::abs(body)) {
    std::ostringstream msg;
    msg << what << ": truncation tail " << tail << " exceeds " << kTailFraction << " of total " << body
        << " (n=" << n << ")";
    throw NumericalError(msg.str());
  }
}

}  // namespace

double real_eig_density_unnorm(long long n, double x) {
  require_n("real_eig_density_unnorm", n);
  if (!std::isfinite(x)) throw std::domain_error("real_eig_density_unnorm: x must be finite");
  const double nd = static_cast<double>(n);
  const double z = nd * x * x;
  const double first = upper_inc_gamma_reg(nd - 1.0, z) / std::sqrt(2.0 * std::numbers::pi);
  double second = 0.0;
  if (x != 0.0) {
    const double log_mag = (nd - 1.0) * std::log(std::sqrt(nd) * std::abs(x)) - 0.5 * z - log_gamma(0.5 * nd) -
                           0.5 * nd * std::numbers::ln2;
    second = std::exp(log_mag) * lower_inc_gamma_reg(0.5 * (nd - 1.0), 0.5 * z);
  }
  return std::sqrt(nd) * (first + second);
}

double complex_eig_density_unnorm(long long n, double x, double y) {
  require_n("complex_eig_density_unnorm", n);
  if (!(y > 0.0)) throw std::domain_error("complex_eig_density_unnorm: y must be > 0");
  if (!std::isfinite(x) || !std::isfinite(y)) throw std::domain_error("complex_eig_density_unnorm: non-finite point");
  const double nd = static_cast<double>(n);
  // exp(n(y^2 - x^2)) erfc(sqrt(2n) y) sum_{k<=n-2} (n r^2)^k / k!
  //   = erfcx(sqrt(2n) y) Q(n-1, n r^2)
  return nd * std::sqrt(nd) * std::sqrt(2.0 / std::numbers::pi) * y * erfcx(std::sqrt(2.0 * nd) * y) *
         upper_inc_gamma_reg(nd - 1.0, nd * (x * x + y * y));
}

ExpectedCounts expected_counts(long long n) {
  require_n("expected_counts", n);
  const double r = truncation_radius(n);
  ExpectedCounts out;
  out.c_real = real_part_integral(n, 0, 0.0, r);
  check_tail("expected_counts(real)", n, out.c_real, real_part_integral(n, 0, r, 2.0 * r));
  out.c_complex = complex_part_integral(n, 0, 0.0, r);
  check_tail("expected_counts(complex)", n, out.c_complex, complex_part_integral(n, 0, r, 2.0 * r));
  return out;
}

double real_case_moment(long long n, long long k) {
  require_n("real_case_moment", n);
  if (k < 0) throw std::domain_error("real_case_moment: k must be >= 0");
  const double r = truncation_radius(n);
  const double body = real_part_integral(n, k, 0.0, r) + complex_part_integral(n, k, 0.0, r);
  const double tail = real_part_integral(n, k, r, 2.0 * r) + complex_part_integral(n, k, r, 2.0 * r);
  check_tail("real_case_moment", n, body, tail);
  return (body + tail) / static_cast<double>(n);
}

RealCaseMonteCarlo real_case_monte_carlo(long long n, const std::vector<long long>& ks, std::size_t trials,
                                         std::uint64_t seed, unsigned threads) {
  if (trials < 2) throw std::domain_error("real_case_monte_carlo: trials must be >= 2");
  EnsembleSpec spec;
  spec.kind = EnsembleKind::Glorot;
  spec.field = ScalarField::real();
  spec.n = n;
  spec.seed = seed;
  spec.validate();

  const std::size_t nk = ks.size();
  std::vector<double> counts(trials);
  std::vector<double> stats(trials * nk);
  parallel_for(trials, threads, [&](std::size_t t) {
    const SpectrumResult s = eigenvalues(sample(spec, matrix_stream(t)));
    counts[t] = static_cast<double>(*s.n_real);
    for (std::size_t j = 0; j < nk; ++j) {
      double acc = 0.0;
      for (const Complex& l : s.eigenvalues) acc += pow_2k(std::norm(l), ks[j]);
      stats[t * nk + j] = acc / static_cast<double>(n);
    }
  });

  const auto mean_sem = [&](auto value) {
    double sum = 0.0;
    for (std::size_t t = 0; t < trials; ++t) sum += value(t);
    const double m = sum / static_cast<double>(trials);
    double ss = 0.0;
    for (std::size_t t = 0; t < trials; ++t) ss += (value(t) - m) * (value(t) - m);
    const double var = ss / static_cast<double>(trials - 1);
    return std::pair{m, std::sqrt(var / static_cast<double>(trials))};
  };

  RealCaseMonteCarlo out;
  out.trials = trials;
  std::tie(out.mean_real_count, out.sem_real_count) = mean_sem([&](std::size_t t) { return counts[t]; });
  for (std::size_t j = 0; j < nk; ++j) {
    const auto [m, sem] = mean_sem([&](std::size_t t) { return stats[t * nk + j]; });
    out.moments.push_back({ks[j], m, sem});
  }
  return out;
}

}  // namespace rglorot
