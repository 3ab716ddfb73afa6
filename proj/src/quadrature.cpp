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

#include "rglorot/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "rglorot/types.hpp"

namespace rglorot {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;

struct Panel {
  double a, b, value, error;
};

Panel apply_rule(const std::function<double(double)>& f, double a, double b) {
  double err = 0.0;
  const double value = Rule::integrate(f, a, b, 0, 0.0, &err);
  // Boost reports the error of the rule mapped to [-1, 1].
  return {a, b, value, err * 0.5 * std::abs(b - a)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw std::domain_error("integrate: limits must be finite");
  QuadratureResult result;
  if (a == b) return result;

  std::vector<Panel> panels{apply_rule(f, a, b)};
  result.evaluations = 21;
  for (;;) {
    double value = 0.0, error = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      value += panels[i].value;
      error += panels[i].error;
      if (panels[i].error > panels[worst].error) worst = i;
    }
    if (!std::isfinite(value)) throw NumericalError("integrate: non-finite integrand value");
    result.value = value;
    result.error = error;
    if (error <= std::max(options.abs_tol, options.rel_tol * std::abs(value))) return result;
    if (panels.size() >= options.max_intervals) {
      std::ostringstream msg;
      msg << "integrate: no convergence on [" << a << ", " << b << "] after " << panels.size()
          << " intervals; achieved abs error " << error << " vs target "
          << std::max(options.abs_tol, options.rel_tol * std::abs(value));
      throw NumericalError(msg.str());
    }
    const Panel split = panels[worst];
    const double mid = 0.5 * (split.a + split.b);
    panels[worst] = apply_rule(f, split.a, mid);
    panels.push_back(apply_rule(f, mid, split.b));
    result.evaluations += 42;
  }
}

QuadratureResult integrate_2d(const std::function<double(double, double)>& f, double ax, double bx, double ay,
                              double by, const QuadratureOptions& options) {
  QuadratureOptions inner = options;
  inner.rel_tol = options.rel_tol * 0.1;
  std::size_t inner_evaluations = 0;
  double inner_error = 0.0;
  const auto outer = [&](double x) {
    const QuadratureResult r = integrate([&](double y) { return f(x, y); }, ay, by, inner);
    inner_evaluations += r.evaluations;
    inner_error = std::max(inner_error, r.error);
    return r.value;
  };
  QuadratureResult result = integrate(outer, ax, bx, options);
  result.evaluations = inner_evaluations;
  result.error += inner_error * std::abs(bx - ax);
  return result;
}

}  // namespace rglorot
