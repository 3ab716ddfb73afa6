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
#include <vector>

namespace rglorot {

// Eigenvalue densities of the real Glorot ensemble (entries N(0, 1/n)),
// normalized so their integrals are expected counts rather than 1.

/// Density of real eigenvalues at x. Integrates over R to E[#real].
///   sqrt(n) [ Q(n-1, n x^2) / sqrt(2 pi)
///           + (sqrt(n)|x|)^{n-1} e^{-n x^2/2} / (Gamma(n/2) 2^{n/2}) P((n-1)/2, n x^2/2) ]
double real_eig_density_unnorm(long long n, double x);

/// Density of complex eigenvalues at x + iy, y > 0. Twice its integral over
/// the upper half-plane is E[#non-real].
///   n^{3/2} sqrt(2/pi) y erfcx(sqrt(2n) y) Q(n-1, n (x^2 + y^2))
/// Throws std::domain_error for y <= 0.
double complex_eig_density_unnorm(long long n, double x, double y);

struct ExpectedCounts {
  double c_real = 0.0;
  double c_complex = 0.0;
  double sum() const { return c_real + c_complex; }
};

/// Integrated densities. Quadrature runs over |lambda| <= 1 + 10/sqrt(n)
/// and checks that the annulus out to twice that radius holds at most 1e-8
/// of the total; NumericalError otherwise.
ExpectedCounts expected_counts(long long n);

/// Per-eigenvalue mean of |lambda|^{2k} for the real ensemble:
/// (1/n) [ int |x|^{2k} rho_real dx + 2 int int_{y>0} |z|^{2k} rho_complex ].
double real_case_moment(long long n, long long k);

struct MomentEstimate {
  long long k = 0;
  double mean = 0.0;
  double sem = 0.0;
};

struct RealCaseMonteCarlo {
  std::size_t trials = 0;
  double mean_real_count = 0.0;
  double sem_real_count = 0.0;
  /// Per-matrix statistic (1/n) sum_i |lambda_i|^{2k}, averaged over trials.
  std::vector<MomentEstimate> moments;
};

/// Monte-Carlo counterpart over real Glorot samples (matrix streams 0..trials-1).
RealCaseMonteCarlo real_case_monte_carlo(long long n, const std::vector<long long>& ks, std::size_t trials,
                                         std::uint64_t seed, unsigned threads = 1);

}  // namespace rglorot
