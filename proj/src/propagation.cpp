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

#include "rglorot/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "rglorot/parallel.hpp"

namespace rglorot {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// W as a dense matrix or a diagonal, in the kernel's scalar type.
template <class Scalar>
struct Operator {
  Mat<Scalar> dense;
  Vec<Scalar> diag;
  bool diagonal = false;

  static Operator from(const SquareMatrix& w) {
    Operator op;
    op.diagonal = w.is_diagonal();
    if constexpr (std::is_same_v<Scalar, double>) {
      if (op.diagonal) {
        op.diag = w.diagonal_entries().real();
      } else {
        op.dense = w.real_part();
      }
    } else {
      if (op.diagonal) {
        op.diag = w.diagonal_entries();
      } else {
        op.dense = w.entries();
      }
    }
    return op;
  }

  Mat<Scalar> apply(const Mat<Scalar>& v) const {
    if (diagonal) return diag.asDiagonal() * v;
    return dense * v;
  }
};

// B trajectories in log-scaled form: column j of h is exp(s[j]) * v.col(j).
// Zero states have v.col(j) = 0 and s[j] = 0 (hidden) or -inf (powers).
template <class Scalar>
class Batch {
 public:
  Batch(long long n, long long b) : v_(Mat<Scalar>::Zero(n, b)), s_(static_cast<std::size_t>(b), 0.0) {}

  void set_initial(const Mat<Scalar>& x) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const double norm = x.col(j).norm();
      if (norm == 0.0) {
        v_.col(j).setZero();
        s_[j] = kNegInf;
      } else {
        v_.col(j) = x.col(j) / norm;
        s_[j] = std::log(norm);
      }
    }
  }

  // y <- W y.
  void power_step(const Operator<Scalar>& op) {
    Mat<Scalar> wv = op.apply(v_);
    for (Eigen::Index j = 0; j < wv.cols(); ++j) {
      const double norm = wv.col(j).norm();
      if (norm == 0.0 || s_[j] == kNegInf) {
        v_.col(j).setZero();
        s_[j] = kNegInf;
      } else {
        v_.col(j) = wv.col(j) / norm;
        s_[j] += std::log(norm);
      }
    }
  }

  // h <- W h + x. For s >= 0 the input is scaled down by e^{-s} (and
  // underflows harmlessly once s is huge); for s < 0 the state is scaled
  // down instead so nothing is amplified.
  void hidden_step(const Operator<Scalar>& op, const Mat<Scalar>& x) {
    Mat<Scalar> w = op.apply(v_);
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      const double s = s_[j];
      if (s >= 0.0) {
        w.col(j) += std::exp(-s) * x.col(j);
      } else {
        w.col(j) = std::exp(s) * w.col(j) + x.col(j);
      }
      const double norm = w.col(j).norm();
      if (norm == 0.0) {
        v_.col(j).setZero();
        s_[j] = 0.0;
        zero_log_[j] = true;
        continue;
      }
      v_.col(j) = w.col(j) / norm;
      s_[j] = (s >= 0.0 ? s : 0.0) + std::log(norm);
      zero_log_[j] = false;
    }
  }

  void track_zero(long long b) { zero_log_.assign(static_cast<std::size_t>(b), true); }

  double log_norm(Eigen::Index j) const {
    if (!zero_log_.empty() && zero_log_[static_cast<std::size_t>(j)]) return kNegInf;
    return s_[static_cast<std::size_t>(j)];
  }

 private:
  Mat<Scalar> v_;
  std::vector<double> s_;
  std::vector<bool> zero_log_;
};

template <class Scalar>
Mat<Scalar> pack_inputs(const std::vector<VectorXc>& inputs, std::size_t t, long long n) {
  const VectorXc& x = inputs[t];
  if (x.size() != n) throw std::domain_error("input dimension does not match the matrix width");
  if constexpr (std::is_same_v<Scalar, double>) {
    return x.real();
  } else {
    return x;
  }
}

template <class Scalar>
std::vector<double> run_hidden_single(const Operator<Scalar>& op, long long n, const std::vector<VectorXc>& inputs) {
  Batch<Scalar> batch(n, 1);
  batch.track_zero(1);
  std::vector<double> out;
  out.reserve(inputs.size());
  for (std::size_t t = 0; t < inputs.size(); ++t) {
    batch.hidden_step(op, pack_inputs<Scalar>(inputs, t, n));
    out.push_back(batch.log_norm(0));
  }
  return out;
}

bool all_real(const std::vector<VectorXc>& inputs) {
  return std::all_of(inputs.begin(), inputs.end(), [](const VectorXc& x) { return x.imag().isZero(0.0); });
}

template <class Scalar>
void fill_inputs(Mat<Scalar>& x, std::vector<RandomStream>& rngs, InputLaw law) {
  const Eigen::Index n = x.rows();
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    RandomStream& rng = rngs[static_cast<std::size_t>(j)];
    if constexpr (std::is_same_v<Scalar, double>) {
      for (Eigen::Index i = 0; i < n; ++i) x(i, j) = rng.normal();
    } else {
      x.col(j) = draw_input(rng, n, law);
    }
  }
}

// One matrix trial: all of its input trials in a single batch.
template <class Scalar>
void run_matrix_trial(const MonteCarloConfig& cfg, const SquareMatrix& w, std::size_t m, double* out) {
  const long long n = cfg.ensemble.n;
  const auto b = static_cast<long long>(cfg.input_trials);
  const Operator<Scalar> op = Operator<Scalar>::from(w);
  std::vector<RandomStream> rngs;
  rngs.reserve(cfg.input_trials);
  for (std::size_t j = 0; j < cfg.input_trials; ++j) rngs.emplace_back(cfg.ensemble.seed, input_stream(m, j));

  const bool powers = cfg.mode == PropagationMode::MatrixPowers;
  const long long steps = powers ? cfg.t_max + 1 : cfg.t_max;
  const auto store = [&](long long s, const Batch<Scalar>& batch) {
    for (long long j = 0; j < b; ++j) out[j * steps + s] = batch.log_norm(j);
  };

  Batch<Scalar> batch(n, b);
  Mat<Scalar> x(n, b);
  if (powers) {
    fill_inputs(x, rngs, cfg.input_law);
    batch.set_initial(x);
    store(0, batch);
    for (long long k = 1; k <= cfg.t_max; ++k) {
      batch.power_step(op);
      store(k, batch);
    }
  } else {
    batch.track_zero(b);
    for (long long t = 0; t < cfg.t_max; ++t) {
      fill_inputs(x, rngs, cfg.input_law);
      batch.hidden_step(op, x);
      store(t, batch);
    }
  }
}

void validate(const MonteCarloConfig& cfg) {
  cfg.ensemble.validate();
  if (cfg.matrix_trials < 1 || cfg.input_trials < 1) throw std::domain_error("monte_carlo: trials must be >= 1");
  if (cfg.t_max < 0) throw std::domain_error("monte_carlo: t_max must be >= 0");
  if (cfg.mode == PropagationMode::HiddenStates && cfg.t_max < 1) {
    throw std::domain_error("monte_carlo: hidden states need t_max >= 1");
  }
}

long long step_count(const MonteCarloConfig& cfg) {
  return cfg.mode == PropagationMode::MatrixPowers ? cfg.t_max + 1 : cfg.t_max;
}

}  // namespace

LogScaledState LogScaledState::zeros(long long n) {
  LogScaledState s;
  s.direction = VectorXc::Zero(n);
  return s;
}

LogScaledState LogScaledState::from_vector(const VectorXc& h) {
  LogScaledState s = zeros(h.size());
  const double norm = h.norm();
  if (norm > 0.0) {
    s.direction = h / norm;
    s.log_scale = std::log(norm);
    s.zero = false;
  }
  return s;
}

double LogScaledState::log_norm() const { return zero ? kNegInf : log_scale; }

VectorXc LogScaledState::to_vector() const {
  if (zero) return VectorXc::Zero(direction.size());
  return std::exp(log_scale) * direction;
}

std::vector<double> matrix_power_norms(const SquareMatrix& w, const VectorXc& x, long long k_max) {
  if (x.size() != w.n()) throw std::domain_error("matrix_power_norms: input dimension does not match");
  if (k_max < 0) throw std::domain_error("matrix_power_norms: k_max must be >= 0");
  if (!x.allFinite()) throw std::domain_error("matrix_power_norms: non-finite input");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k_max + 1));
  const auto run = [&](auto tag) {
    using Scalar = decltype(tag);
    const Operator<Scalar> op = Operator<Scalar>::from(w);
    Batch<Scalar> batch(w.n(), 1);
    if constexpr (std::is_same_v<Scalar, double>) {
      batch.set_initial(Mat<double>(x.real()));
    } else {
      batch.set_initial(Mat<Complex>(x));
    }
    out.push_back(batch.log_norm(0));
    for (long long k = 1; k <= k_max; ++k) {
      batch.power_step(op);
      out.push_back(batch.log_norm(0));
    }
  };
  if (w.real_valued() && x.imag().isZero(0.0)) {
    run(double{});
  } else {
    run(Complex{});
  }
  return out;
}

std::vector<double> hidden_state_trajectory(const SquareMatrix& w, const std::vector<VectorXc>& inputs) {
  if (w.real_valued() && all_real(inputs)) return run_hidden_single(Operator<double>::from(w), w.n(), inputs);
  return run_hidden_single(Operator<Complex>::from(w), w.n(), inputs);
}

std::vector<double> diagonal_trajectory(const VectorXc& diag, const std::vector<VectorXc>& inputs) {
  return hidden_state_trajectory(SquareMatrix::diagonal(diag), inputs);
}

std::string to_string(InputLaw law) { return law == InputLaw::Real ? "real" : "complex"; }

InputLaw parse_input_law(const std::string& text) {
  if (text == "real") return InputLaw::Real;
  if (text == "complex") return InputLaw::Complex;
  throw std::invalid_argument("unknown input law '" + text + "' (expected real|complex)");
}

std::uint64_t input_stream(std::uint64_t matrix_trial, std::uint64_t input_trial) {
  return stream_id(StreamTag::Input, matrix_trial, input_trial);
}

VectorXc draw_input(RandomStream& rng, long long n, InputLaw law) {
  VectorXc x(n);
  if (law == InputLaw::Real) {
    for (long long i = 0; i < n; ++i) x(i) = Complex(rng.normal(), 0.0);
  } else {
    for (long long i = 0; i < n; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      x(i) = Complex(re, im) * std::numbers::sqrt2 * 0.5;
    }
  }
  return x;
}

std::vector<double> monte_carlo_log_norms(const MonteCarloConfig& config) {
  validate(config);
  pin_blas_threads();
  const long long steps = step_count(config);
  const std::size_t per_matrix = config.input_trials * static_cast<std::size_t>(steps);
  std::vector<double> out(config.matrix_trials * per_matrix);
  const bool real_kernel = config.ensemble.field.is_real() && config.input_law == InputLaw::Real;
  parallel_for(config.matrix_trials, config.threads, [&](std::size_t m) {
    const SquareMatrix w = sample(config.ensemble, matrix_stream(m));
    double* slot = out.data() + m * per_matrix;
    if (real_kernel && w.real_valued()) {
      run_matrix_trial<double>(config, w, m, slot);
    } else {
      run_matrix_trial<Complex>(config, w, m, slot);
    }
  });
  return out;
}

TrajectoryStats monte_carlo(const MonteCarloConfig& config) {
  const std::vector<double> logs = monte_carlo_log_norms(config);
  const long long steps = step_count(config);
  const std::size_t count = config.matrix_trials * config.input_trials;
  const double nd = static_cast<double>(count);

  TrajectoryStats stats;
  stats.steps.reserve(static_cast<std::size_t>(steps));
  std::vector<double> l2(count);
  for (long long s = 0; s < steps; ++s) {
    for (std::size_t i = 0; i < count; ++i) l2[i] = 2.0 * logs[i * static_cast<std::size_t>(steps) + s];
    StepStats st;
    st.t = config.mode == PropagationMode::MatrixPowers ? s : s + 1;
    st.trials = count;

    double sum = 0.0;
    for (double v : l2) sum += v;
    st.mean_log_sq_norm = sum / nd;
    if (count > 1 && std::isfinite(st.mean_log_sq_norm)) {
      double ss = 0.0;
      for (double v : l2) ss += (v - st.mean_log_sq_norm) * (v - st.mean_log_sq_norm);
      st.std_log_sq_norm = std::sqrt(ss / (nd - 1.0));
    }

    const double top = *std::max_element(l2.begin(), l2.end());
    if (std::isfinite(top)) {
      double su = 0.0;
      for (double v : l2) su += std::exp(v - top);
      const double mu = su / nd;
      st.log_mean_sq_norm = top + std::log(mu);
      if (count > 1) {
        double ss = 0.0;
        for (double v : l2) ss += (std::exp(v - top) - mu) * (std::exp(v - top) - mu);
        st.rel_sem = std::sqrt(ss / (nd - 1.0)) / (mu * std::sqrt(nd));
      }
    } else {
      st.log_mean_sq_norm = kNegInf;
    }
    stats.steps.push_back(st);
  }
  return stats;
}

}  // namespace rglorot
