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

#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rglorot/ensemble.hpp"
#include "rglorot/random.hpp"
#include "rglorot/spectral.hpp"

using namespace rglorot;

namespace {

MatrixXc gaussian(RandomStream& rng, long long n) {
  MatrixXc g(n, n);
  for (long long j = 0; j < n; ++j)
    for (long long i = 0; i < n; ++i) {
      const double re = rng.normal();
      g(i, j) = Complex(re, rng.normal());
    }
  return g;
}

// Largest distance from an expected eigenvalue to its nearest unused computed one.
double match_error(std::vector<Complex> got, const std::vector<Complex>& expected) {
  double worst = 0.0;
  for (const Complex& e : expected) {
    auto it = std::min_element(got.begin(), got.end(),
                               [&](const Complex& a, const Complex& b) { return std::abs(a - e) < std::abs(b - e); });
    worst = std::max(worst, std::abs(*it - e));
    got.erase(it);
  }
  return worst;
}

}  // namespace

TEST_CASE("unitary-conjugated known spectra") {
  RandomStream rng(99, stream_id(StreamTag::Auxiliary, 1));
  for (int trial = 0; trial < 40; ++trial) {
    const long long n = 2 + trial * 2;
    const MatrixXc q = Eigen::HouseholderQR<MatrixXc>(gaussian(rng, n)).householderQ();
    std::vector<Complex> d(static_cast<std::size_t>(n));
    for (auto& l : d) l = std::polar(std::sqrt(rng.uniform()) * 2.0, 2 * std::numbers::pi * rng.uniform());
    VectorXc dv = Eigen::Map<VectorXc>(d.data(), n);
    const MatrixXc a = q * dv.asDiagonal() * q.adjoint();
    const SpectrumResult s = eigenvalues(SquareMatrix(a, false));
    CHECK(match_error(s.eigenvalues, d) <= 1e-8);
    CHECK(s.residual_max <= 1e-12);
    CHECK(!s.n_real.has_value());
  }
}

TEST_CASE("real matrices give exact conjugate pairs") {
  EnsembleSpec spec{EnsembleKind::Glorot, ScalarField::real(), 80, std::nullopt, 4};
  const SpectrumResult s = eigenvalues(sample(spec));
  REQUIRE(s.n_real.has_value());
  const RealCounts c = classify_real(s);
  CHECK(c.n_real == *s.n_real);
  CHECK(c.n_real + c.n_complex == 80);
  CHECK((80 - c.n_real) % 2 == 0);
  for (const Complex& l : s.eigenvalues) {
    if (l.imag() == 0.0) continue;
    CHECK(std::count(s.eigenvalues.begin(), s.eigenvalues.end(), std::conj(l)) >= 1);
  }
}

TEST_CASE("agrees with an independent dense eigensolver") {
  for (auto field : {ScalarField::real(), ScalarField::complex()}) {
    EnsembleSpec spec{EnsembleKind::Glorot, field, 120, std::nullopt, 8};
    const SquareMatrix w = sample(spec);
    Eigen::ComplexEigenSolver<MatrixXc> ces(w.entries(), false);
    REQUIRE(ces.info() == Eigen::Success);
    std::vector<Complex> ref(ces.eigenvalues().data(), ces.eigenvalues().data() + 120);
    const SpectrumResult s = eigenvalues(w);
    CHECK(match_error(s.eigenvalues, ref) <= 1e-10);
    CHECK(s.radius == doctest::Approx(std::abs(s.eigenvalues.front())));
  }
}

TEST_CASE("eigenvalues are sorted by modulus with a deterministic tiebreak") {
  VectorXc d(5);
  d << Complex(0, 1), Complex(1, 0), Complex(0, -1), Complex(-1, 0), Complex(0.5, 0);
  const SpectrumResult s = eigenvalues(SquareMatrix::diagonal(d));
  CHECK(s.eigenvalues[0] == Complex(1, 0));
  CHECK(s.eigenvalues[1] == Complex(0, 1));
  CHECK(s.eigenvalues[2] == Complex(0, -1));
  CHECK(s.eigenvalues[3] == Complex(-1, 0));
  CHECK(s.eigenvalues[4] == Complex(0.5, 0));
  CHECK(s.radius == 1.0);
}

TEST_CASE("invalid inputs") {
  MatrixXc m = MatrixXc::Identity(3, 3);
  m(1, 1) = Complex(std::nan(""), 0);
  CHECK_THROWS_AS(SquareMatrix(m, false), std::domain_error);
  CHECK_THROWS_AS(eigenvalues(SquareMatrix(MatrixXc(0, 0), false)), std::domain_error);
}

TEST_CASE("radius statistics are independent of thread count") {
  EnsembleSpec spec{EnsembleKind::Glorot, ScalarField::complex(), 60, std::nullopt, 21};
  const RadiusSummary a = radius_statistics(spec, 12, 1);
  const RadiusSummary b = radius_statistics(spec, 12, 4);
  REQUIRE(a.samples.size() == 12);
  for (std::size_t i = 0; i < 12; ++i) CHECK(a.samples[i].radius == b.samples[i].radius);
  CHECK(a.mean == b.mean);
  CHECK(a.std == b.std);
  CHECK(a.failures.empty());
}

TEST_CASE("asymptotic radius law") {
  const auto C = ScalarField::complex();
  const auto R = ScalarField::real();
  const double nd = 1000.0;
  const double rho = rho_n(1000);
  CHECK(expected_radius_asymptotic(1000, C) ==
        doctest::Approx(1 + std::sqrt(rho / (4 * nd)) + 0.5772156649015329 / std::sqrt(4 * rho * nd)));
  const double edge = 1 + std::sqrt(rho / (4 * nd));
  CHECK(prob_radius_below(1000, C, edge) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(prob_radius_below(1000, R, edge) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  CHECK(prob_radius_below(1000, C, 1.0) == doctest::Approx(0.035).epsilon(0.05));
  CHECK(prob_radius_below(1000, C, 1.0) < prob_radius_below(1000, C, 1.05));
  CHECK_THROWS_AS(expected_radius_asymptotic(100, C), std::domain_error);
}

TEST_CASE("circular law distance") {
  CHECK_THROWS_AS(circular_law_distance(std::vector<Complex>{}), std::domain_error);
  const std::vector<Complex> half(10, Complex(0.5, 0.0));
  CHECK(circular_law_distance(half) == doctest::Approx(0.75));
  EnsembleSpec disk{EnsembleKind::DiagUniformDisk, ScalarField::complex(), 5000, std::nullopt, 3};
  const SpectrumResult s = eigenvalues(sample(disk));
  CHECK(circular_law_distance(s.eigenvalues) < 1.63 / std::sqrt(5000.0));  // 1% KS critical value
  EnsembleSpec circle = disk;
  circle.kind = EnsembleKind::DiagUniformCircle;
  CHECK(circular_law_distance(eigenvalues(sample(circle)).eigenvalues) > 0.9);
}
