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

#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "rglorot/moments.hpp"

using namespace rglorot;

namespace {

// Independent oracle: log-gamma in extended precision.
long double lgamma_ratio(long long n, long long k) {
  const long double nd = static_cast<long double>(n);
  return std::lgamma(nd + k + 1.0L) - std::lgamma(nd + 1.0L) - static_cast<long double>(k) * std::log(nd);
}

// Direct linear-domain product (n/(k+1)) prod (1 + d/n).
long double direct_bound(long long n, long long k) {
  long double p = static_cast<long double>(n) / static_cast<long double>(k + 1);
  for (long long d = 1; d <= k; ++d) p *= 1.0L + static_cast<long double>(d) / static_cast<long double>(n);
  return p;
}

}  // namespace

TEST_CASE("log factorial ratio") {
  CHECK(log_factorial_ratio(7, 0) == 0.0);
  CHECK(log_factorial_ratio(2, 1) == doctest::Approx(std::log(1.5)).epsilon(1e-15));
  for (long long n : {1LL, 3LL, 100LL, 10000LL, 1000000LL}) {
    for (long long k : {1LL, 17LL, 1000LL, 100000LL, 1000000LL}) {
      const double oracle = static_cast<double>(lgamma_ratio(n, k));
      INFO("n=", n, " k=", k);
      CHECK(std::abs(log_factorial_ratio(n, k) - oracle) <= 1e-10 * std::max(1.0, std::abs(oracle)));
    }
  }
  // alpha = k / sqrt(n) = 10: leading term alpha^2/2 = 50 less the cubic correction k^3/(6 n^2).
  const double v = log_factorial_ratio(10000, 1000);
  CHECK(v == doctest::Approx(static_cast<double>(lgamma_ratio(10000, 1000))).epsilon(1e-12));
  CHECK(std::abs(v - 50.0) < 2.0);
  CHECK_THROWS_AS(log_factorial_ratio(0, 1), std::domain_error);
  CHECK_THROWS_AS(log_factorial_ratio(5, -1), std::domain_error);
}

TEST_CASE("moment lower bound") {
  for (long long n : {1LL, 10LL, 500LL}) CHECK(moment_lower_bound(n, 0) == doctest::Approx(n).epsilon(1e-15));
  CHECK(moment_lower_bound(2, 1) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(expected_modulus_moment(2, 1) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(expected_modulus_moment(40, 0) == 1.0);
  for (long long n = 1; n <= 150; n += 7) {
    for (long long k = 0; k <= 150; k += 5) {
      const double direct = static_cast<double>(direct_bound(n, k));
      CHECK(moment_lower_bound(n, k) == doctest::Approx(direct).epsilon(1e-12));
      CHECK((k + 1) * moment_lower_bound(n, k) / n >= 1.0 - 1e-15);
    }
  }
  // log form stays finite far past double overflow.
  CHECK(std::isfinite(log_moment_lower_bound(500, 20000)));
  CHECK(std::isinf(moment_lower_bound(500, 20000)));
}

TEST_CASE("hidden state lower bound") {
  CHECK(hidden_state_lower_bound(300, 0) == doctest::Approx(300.0).epsilon(1e-15));
  // Large-width proxy: the per-unit bound approaches the partial harmonic sum.
  const double h = hidden_state_lower_bound(1000000, 100) / 1e6;
  CHECK(h == doctest::Approx(harmonic_partial_sum(100)).epsilon(1e-3));
  CHECK(harmonic_partial_sum(100) == doctest::Approx(5.19728).epsilon(1e-6));
  // Double-scaling approximation sum e^{k^2/2n}/(k+1) at n=500, t=67.
  double approx = 0.0;
  for (int k = 0; k <= 67; ++k) approx += std::exp(k * k / 1000.0) / (k + 1);
  CHECK(hidden_state_lower_bound(500, 67) / 500.0 >= 0.9 * approx);
  for (long long t = 1; t <= 300; t += 13) {
    const double diff = hidden_state_lower_bound(500, t) - hidden_state_lower_bound(500, t - 1);
    CHECK(diff == doctest::Approx(moment_lower_bound(500, t)).epsilon(1e-11));
  }
  double direct = 0.0;
  for (long long k = 0; k <= 120; ++k) direct += static_cast<double>(direct_bound(200, k));
  CHECK(hidden_state_lower_bound(200, 120) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(std::isfinite(log_hidden_state_lower_bound(500, 50000)));
}

TEST_CASE("harmonic asymptotic") {
  CHECK(harmonic_asymptotic(100) == doctest::Approx(5.177).epsilon(2e-4));
  CHECK(std::abs(harmonic_asymptotic(100) - harmonic_partial_sum(100)) < 0.03);
  CHECK(std::abs(harmonic_asymptotic(10000) - harmonic_partial_sum(10000)) < 3e-4);
  // The shifted logarithm log(t-1) leaves a first-order gap: t * gap -> 2.
  for (long long t : {100LL, 1000LL, 10000LL}) {
    const double gap = harmonic_partial_sum(t) - harmonic_asymptotic(t);
    CHECK(t * gap == doctest::Approx(2.0).epsilon(0.02));
  }
  CHECK_THROWS_AS(harmonic_asymptotic(1), std::domain_error);
}

TEST_CASE("harmonic partial sum") {
  CHECK(harmonic_partial_sum(0) == 1.0);
  CHECK(harmonic_partial_sum(2) == doctest::Approx(1.0 + 0.5 + 1.0 / 3.0).epsilon(1e-16));
  // H_{10^7 + 1} = log(N) + gamma + 1/(2N) - 1/(12 N^2), N = 10^7 + 1.
  const double n = 1e7 + 1;
  CHECK(harmonic_partial_sum(10000000) ==
        doctest::Approx(std::log(n) + 0.57721566490153286 + 1 / (2 * n) - 1 / (12 * n * n)).epsilon(1e-15));
}

TEST_CASE("double scaling factor") {
  CHECK(double_scaling_factor(100, 0) == 1.0);
  CHECK(double_scaling_factor(500, 67) == doctest::Approx(89.0).epsilon(1e-3));
  const double r4 = std::exp(log_factorial_ratio(10000, 200)) / double_scaling_factor(10000, 200);
  const double r6 = std::exp(log_factorial_ratio(1000000, 2000)) / double_scaling_factor(1000000, 2000);
  CHECK(std::abs(r4 - 1.0) < 0.05);
  CHECK(std::abs(r6 - 1.0) < 0.005);
}

TEST_CASE("explosion envelope") {
  CHECK(explosion_envelope(10000, 100) == doctest::Approx(100.0 * std::exp(0.5)).epsilon(1e-14));
  CHECK(explosion_envelope(500, 100) == doctest::Approx(5.0 * std::exp(10.0)).epsilon(1e-14));
  CHECK(explosion_envelope(500, 100) == doctest::Approx(1.10e5).epsilon(0.005));
  CHECK_THROWS_AS(explosion_envelope(500, 0), std::domain_error);
  // Near t = sqrt(n) the envelope is within a decade of the exact sum; it
  // overshoots by a factor growing like t afterwards, tracking (n/t^2) e^{t^2/2n}.
  for (long long t = 22; t <= 33; ++t) {
    const double ratio = explosion_envelope(500, t) / (hidden_state_lower_bound(500, t) / 500.0);
    CHECK(ratio >= 0.1);
    CHECK(ratio <= 10.0);
  }
  for (long long t = 22; t <= 89; ++t) {
    const double ratio = explosion_envelope(500, t) / (hidden_state_lower_bound(500, t) / 500.0);
    CHECK(ratio / t >= 0.25);
    CHECK(ratio / t <= 2.0);
  }
}
