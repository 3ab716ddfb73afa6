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
#include <functional>

namespace rglorot {

struct QuadratureOptions {
  double rel_tol = 1e-11;
  double abs_tol = 1e-300;
  std::size_t max_intervals = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  ///< Estimated absolute error.
  std::size_t evaluations = 0;
};

/// Globally adaptive 21-point Gauss-Kronrod on [a, b]. The interval with the
/// largest error estimate is bisected until total error <= max(abs_tol,
/// rel_tol |value|). Subdivision order is fixed, so results are
/// deterministic. Throws NumericalError with the achieved tolerance when
/// max_intervals is exhausted.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

/// Tensorized 2-D rule: integral over x in [ax, bx] of the inner adaptive
/// integral over y in [ay, by] of f(x, y). Inner integrals run at a tighter
/// tolerance than the outer one.
QuadratureResult integrate_2d(const std::function<double(double, double)>& f, double ax, double bx, double ay,
                              double by, const QuadratureOptions& options = {});

}  // namespace rglorot
