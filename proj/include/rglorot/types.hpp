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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace rglorot {

using Complex = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Raised when an iterative numerical routine (eigensolver, quadrature)
/// fails to reach its target. `what()` carries the diagnostics.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Real vs complex scalar field of an ensemble. `delta_r()` is 1 for real.
class ScalarField {
 public:
  enum class Variant { Real, Complex };

  constexpr ScalarField() = default;
  constexpr explicit ScalarField(Variant v) : variant_(v) {}

  static constexpr ScalarField real() { return ScalarField(Variant::Real); }
  static constexpr ScalarField complex() { return ScalarField(Variant::Complex); }

  constexpr Variant variant() const { return variant_; }
  constexpr bool is_real() const { return variant_ == Variant::Real; }
  constexpr int delta_r() const { return is_real() ? 1 : 0; }

  constexpr bool operator==(const ScalarField&) const = default;

 private:
  Variant variant_ = Variant::Complex;
};

std::string to_string(ScalarField field);
/// Accepts "real" or "complex"; throws std::invalid_argument otherwise.
ScalarField parse_field(const std::string& text);

}  // namespace rglorot
