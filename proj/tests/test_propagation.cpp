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

#include <cmath>

#include "rglorot/propagation.hpp"
#include "rglorot/spectral.hpp"

using namespace rglorot;

namespace {

std::vector<VectorXc> inputs_for(std::uint64_t seed, std::uint64_t m, std::uint64_t j, long long n, long long t,
                                 InputLaw law) {
  RandomStream rng(seed, input_stream(m, j));
  std::vector<VectorXc> xs;
  for (long long i = 0; i < t; ++i) xs.push_back(draw_input(rng, n, law));
  return xs;
}

}  // namespace

TEST_CASE("matrix powers of scaled identities") {
  const auto xs = inputs_for(1, 0, 0, 30, 1, InputLaw::Complex);
  const double lx = std::log(xs[0].norm());
  const auto id = matrix_power_norms(SquareMatrix(MatrixXc::Identity(30, 30), true), xs[0], 50);
  REQUIRE(id.size() == 51);
  for (double v : id) CHECK(v == doctest::Approx(lx).epsilon(1e-14));
  const Complex c = std::polar(0.7, 0.4);
  const auto cw = matrix_power_norms(SquareMatrix(c * MatrixXc::Identity(30, 30), false), xs[0], 2000);
  for (long long k = 0; k <= 2000; k += 100) CHECK(cw[k] == doctest::Approx(lx + k * std::log(0.7)).epsilon(1e-12));
  const auto zero = matrix_power_norms(SquareMatrix(MatrixXc::Identity(30, 30), true), VectorXc::Zero(30), 3);
  for (double v : zero) CHECK(std::isinf(v));
  CHECK_THROWS_AS(matrix_power_norms(SquareMatrix(MatrixXc::Identity(30, 30), true), VectorXc::Zero(29), 3),
                  std::domain_error);
}

TEST_CASE("hidden states with trivial recurrences") {
  const auto xs = inputs_for(2, 0, 0, 40, 30, InputLaw::Real);
  const auto zero_w = hidden_state_trajectory(SquareMatrix(MatrixXc::Zero(40, 40), true), xs);
  for (std::size_t t = 0; t < xs.size(); ++t) CHECK(zero_w[t] == doctest::Approx(std::log(xs[t].norm())).epsilon(1e-14));

  const auto ones = diagonal_trajectory(VectorXc::Ones(40), xs);
  VectorXc h = VectorXc::Zero(40);
  for (std::size_t t = 0; t < xs.size(); ++t) {
    h += xs[t];
    CHECK(ones[t] == doctest::Approx(std::log(h.norm())).epsilon(1e-13));
  }
  const auto huge = hidden_state_trajectory(SquareMatrix(2.0 * MatrixXc::Identity(40, 40), true),
                                            inputs_for(2, 0, 0, 40, 3000, InputLaw::Real));
  CHECK(std::isfinite(huge.back()));
  CHECK(huge.back() == doctest::Approx(2999 * std::log(2.0)).epsilon(1e-3));
  CHECK_THROWS_AS(hidden_state_trajectory(SquareMatrix(MatrixXc::Zero(41, 41), true), xs), std::domain_error);
}

TEST_CASE("log-scaled recurrence matches the naive one") {
  for (auto field : {ScalarField::real(), ScalarField::complex()}) {
    EnsembleSpec spec{EnsembleKind::Glorot, field, 50, std::nullopt, 31};
    SquareMatrix w = sample(spec);
    const double radius = eigenvalues(w).radius;
    if (radius > 1.04) w = w.scaled(1.04 / radius);
    const auto xs = inputs_for(31, 0, 0, 50, 100, InputLaw::Real);
    const auto logs = hidden_state_trajectory(w, xs);
    VectorXc h = VectorXc::Zero(50);
    double worst = 0.0;
    for (std::size_t t = 0; t < xs.size(); ++t) {
      h = w.entries() * h + xs[t];
      worst = std::max(worst, std::abs(std::exp(logs[t]) / h.norm() - 1.0));
    }
    CHECK(worst <= 1e-8);

    const auto pw = matrix_power_norms(w, xs[0], 100);
    VectorXc y = xs[0];
    worst = 0.0;
    for (std::size_t k = 0; k < pw.size(); ++k) {
      worst = std::max(worst, std::abs(std::exp(pw[k]) / y.norm() - 1.0));
      y = w.entries() * y;
    }
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("single-trial Monte Carlo reproduces the direct trajectory") {
  for (auto field : {ScalarField::real(), ScalarField::complex()}) {
    for (auto law : {InputLaw::Real, InputLaw::Complex}) {
      MonteCarloConfig cfg;
      cfg.ensemble = EnsembleSpec{EnsembleKind::Glorot, field, 64, std::nullopt, 77};
      cfg.t_max = 40;
      cfg.input_law = law;
      const TrajectoryStats stats = monte_carlo(cfg);
      const SquareMatrix w = sample(cfg.ensemble, matrix_stream(0));
      const auto direct = hidden_state_trajectory(w, inputs_for(77, 0, 0, 64, 40, law));
      REQUIRE(stats.steps.size() == 40);
      for (std::size_t t = 0; t < 40; ++t) {
        CHECK(stats.steps[t].t == static_cast<long long>(t + 1));
        CHECK(stats.steps[t].mean_log_sq_norm == 2.0 * direct[t]);
        CHECK(stats.steps[t].std_log_sq_norm == 0.0);
      }
      cfg.mode = PropagationMode::MatrixPowers;
      const TrajectoryStats ps = monte_carlo(cfg);
      const auto pd = matrix_power_norms(w, inputs_for(77, 0, 0, 64, 1, law)[0], 40);
      REQUIRE(ps.steps.size() == 41);
      for (std::size_t k = 0; k <= 40; ++k) CHECK(ps.steps[k].mean_log_sq_norm == 2.0 * pd[k]);
    }
  }
}

TEST_CASE("Monte Carlo statistics are thread-count invariant") {
  MonteCarloConfig cfg;
  cfg.ensemble = EnsembleSpec{EnsembleKind::Rescaled, ScalarField::complex(), 200, std::nullopt, 5};
  cfg.t_max = 30;
  cfg.matrix_trials = 5;
  cfg.input_trials = 3;
  cfg.threads = 1;
  const auto a = monte_carlo_log_norms(cfg);
  cfg.threads = 3;
  const auto b = monte_carlo_log_norms(cfg);
  CHECK(a == b);
}

TEST_CASE("paired seeds: Glorot power norms dominate rescaled ones exactly") {
  MonteCarloConfig cfg;
  cfg.ensemble = EnsembleSpec{EnsembleKind::Glorot, ScalarField::real(), 300, std::nullopt, 9};
  cfg.mode = PropagationMode::MatrixPowers;
  cfg.t_max = 50;
  cfg.matrix_trials = 2;
  cfg.input_trials = 2;
  const auto g = monte_carlo_log_norms(cfg);
  cfg.ensemble.kind = EnsembleKind::Rescaled;
  const auto r = monte_carlo_log_norms(cfg);
  const double log_s = std::log(rescale_factor(300, ScalarField::real(), default_ap(ScalarField::real())));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double k = static_cast<double>(i % 51);
    CHECK(g[i] >= r[i]);
    CHECK(g[i] - r[i] == doctest::Approx(k * log_s).epsilon(1e-9));
  }
}

TEST_CASE("log-scaled state") {
  VectorXc h(3);
  h << Complex(3, 0), Complex(0, 4), Complex(0, 0);
  const LogScaledState s = LogScaledState::from_vector(h);
  CHECK(!s.zero);
  CHECK(s.log_norm() == doctest::Approx(std::log(5.0)));
  CHECK(std::abs(s.direction.norm() - 1.0) < 1e-12);
  CHECK((s.to_vector() - h).norm() < 1e-14);
  CHECK(std::isinf(LogScaledState::zeros(3).log_norm()));
}

TEST_CASE("config validation") {
  MonteCarloConfig cfg;
  cfg.ensemble = EnsembleSpec{EnsembleKind::Glorot, ScalarField::real(), 10, std::nullopt, 1};
  cfg.t_max = 0;
  CHECK_THROWS_AS(monte_carlo(cfg), std::domain_error);
  cfg.t_max = 5;
  cfg.matrix_trials = 0;
  CHECK_THROWS_AS(monte_carlo(cfg), std::domain_error);
  CHECK(parse_input_law("complex") == InputLaw::Complex);
  CHECK_THROWS_AS(parse_input_law("laplace"), std::invalid_argument);
}
