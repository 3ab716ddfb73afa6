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

#include "rglorot/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rglorot/types.hpp"

namespace rglorot {

namespace {

void require_nk(const char* what, long long n, long long k) {
  if (n < 1) throw std::domain_error(std::string(what) + ": n must be >= 1");
  if (k < 0) throw std::domain_error(std::string(what) + ": k must be >= 0");
}

// Neumaier summation.
struct CompensatedSum {
  long double sum = 0.0L;
  long double c = 0.0L;
  void add(long double x) {
    const long double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      c += (sum - t) + x;
    } else {
      c += (x - t) + sum;
    }
    sum = t;
  }
  long double value() const { return sum + c; }
};

}  // namespace

double log_factorial_ratio(long long n, long long k) {
  require_nk("log_factorial_ratio", n, k);
  const long double nd = static_cast<long double>(n);
  CompensatedSum acc;
  for (long long d = 1; d <= k; ++d) acc.add(std::log1p(static_cast<long double>(d) / nd));
  return static_cast<double>(acc.value());
}

double log_moment_lower_bound(long long n, long long k) {
  require_nk("moment_lower_bound", n, k);
  return log_factorial_ratio(n, k) + std::log(static_cast<double>(n)) - std::log(static_cast<double>(k + 1));
}

double moment_lower_bound(long long n, long long k) { return std::exp(log_moment_lower_bound(n, k)); }

double expected_modulus_moment(long long n, long long k) {
  require_nk("expected_modulus_moment", n, k);
  return std::exp(log_factorial_ratio(n, k) - std::log(static_cast<double>(k + 1)));
}

double log_hidden_state_lower_bound(long long n, long long t) {
  require_nk("hidden_state_lower_bound", n, t);
  const long double nd = static_cast<long double>(n);
  // Terms log(n) + lfr(n,k) - log(k+1); lfr is accumulated incrementally.
  CompensatedSum lfr;
  long double running_max = 0.0L;
  long double scaled = 0.0L;  // sum of exp(term - running_max)
  for (long long k = 0; k <= t; ++k) {
    if (k > 0) lfr.add(std::log1p(static_cast<long double>(k) / nd));
    const long double term = lfr.value() - std::log(static_cast<long double>(k + 1));
    if (k == 0 || term > running_max) {
      scaled = (k == 0 ? 0.0L : scaled * std::exp(running_max - term)) + 1.0L;
      running_max = term;
    } else {
      scaled += std::exp(term - running_max);
    }
  }
  return static_cast<double>(std::log(nd) + running_max + std::log(scaled));
}

double hidden_state_lower_bound(long long n, long long t) { return std::exp(log_hidden_state_lower_bound(n, t)); }

double harmonic_asymptotic(long long t) {
  if (t < 2) throw std::domain_error("harmonic_asymptotic: t must be >= 2");
  const double td = static_cast<double>(t);
  return std::log(td - 1.0) + kEulerGamma + 1.0 / (2.0 * td);
}

double harmonic_partial_sum(long long t) {
  if (t < 0) throw std::domain_error("harmonic_partial_sum: t must be >= 0");
  CompensatedSum acc;
  for (long long k = t; k >= 0; --k) acc.add(1.0L / static_cast<long double>(k + 1));
  return static_cast<double>(acc.value());
}

double log_double_scaling_factor(long long n, long long k) {
  require_nk("double_scaling_factor", n, k);
  const double kd = static_cast<double>(k);
  return kd * kd / (2.0 * static_cast<double>(n));
}

double double_scaling_factor(long long n, long long k) { return std::exp(log_double_scaling_factor(n, k)); }

double log_explosion_envelope(long long n, long long t) {
  if (n < 1) throw std::domain_error("explosion_envelope: n must be >= 1");
  if (t < 1) throw std::domain_error("explosion_envelope: t must be >= 1");
  const double nd = static_cast<double>(n);
  const double td = static_cast<double>(t);
  return std::log(nd / td) + td * td / (2.0 * nd);
}

double explosion_envelope(long long n, long long t) { return std::exp(log_explosion_envelope(n, t)); }

}  // namespace rglorot
