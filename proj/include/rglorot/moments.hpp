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

namespace rglorot {

/// sum_{d=1}^{k} log(1 + d/n) = log[(n+k)! / (n! n^k)], compensated.
double log_factorial_ratio(long long n, long long k);

/// Lower bound on E|W^k x|^2 for complex Glorot W and x ~ N(0, I_n):
/// (n / (k+1)) (n+k)! / (n! n^k). Equals n at k = 0.
double moment_lower_bound(long long n, long long k);
double log_moment_lower_bound(long long n, long long k);

/// E|lambda|^{2k} of a complex Glorot eigenvalue: moment_lower_bound / n.
double expected_modulus_moment(long long n, long long k);

/// sum_{k=0}^{t} moment_lower_bound(n, k), accumulated by log-sum-exp.
double hidden_state_lower_bound(long long n, long long t);
double log_hidden_state_lower_bound(long long n, long long t);

/// log(t-1) + gamma + 1/(2t). Throws std::domain_error for t < 2.
double harmonic_asymptotic(long long t);

/// sum_{k=0}^{t} 1/(k+1) in extended precision, smallest terms first.
double harmonic_partial_sum(long long t);

/// exp(k^2 / 2n).
double double_scaling_factor(long long n, long long k);
double log_double_scaling_factor(long long n, long long k);

/// (n/t) exp(t^2 / 2n). An order-of-magnitude envelope, not a bound.
double explosion_envelope(long long n, long long t);
double log_explosion_envelope(long long n, long long t);

}  // namespace rglorot
