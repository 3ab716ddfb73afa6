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

double erfc(double x);

/// Scaled complementary error function e^{x^2} erfc(x). Finite for all
/// x >= -26; decays like 1/(x sqrt(pi)) for large x.
double erfcx(double x);

/// log |Gamma(s)|, s > 0.
double log_gamma(double s);

/// Regularized incomplete gammas Q(s, z) = Gamma(s, z)/Gamma(s) and
/// P(s, x) = 1 - Q(s, x). Require s > 0 and a nonnegative argument;
/// throw std::domain_error otherwise.
double upper_inc_gamma_reg(double s, double z);
double lower_inc_gamma_reg(double s, double x);

}  // namespace rglorot
