/* Copyright 2026 The mzbell Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "mzbell/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mzbell {
namespace {

constexpr double kNormTol = 1e-10;
constexpr double kTailWarn = 1e-4;
constexpr double kTailRefuse = 1e-6;

LinearOperator displacement_or_throw(Complex beta, TruncatedFockSpace space) {
  return displacement_matrix(beta, space).value;
}

std::size_t auto_work_dim(Complex b1, Complex b2, std::size_t state_dim) {
  const double b = std::max(std::abs(b1), std::abs(b2));
  return state_dim + static_cast<std::size_t>(std::ceil(
                         b * b + 8.0 * b * std::sqrt(static_cast<double>(state_dim)) + 16.0));
}

}  // namespace

Checked<MeasurementDistribution> measurement_distribution(const StateVector& psi, Complex beta,
                                                          TruncatedFockSpace work_space) {
  return measurement_distribution(psi, beta, displacement_or_throw(beta, work_space));
}

Checked<MeasurementDistribution> measurement_distribution(const StateVector& psi, Complex beta,
                                                          const LinearOperator& displacement) {
  if (psi.norm_deviation() > kNormTol) {
    std::ostringstream os;
    os << "measurement_distribution: state norm deviates from 1 by " << psi.norm_deviation();
    throw DomainError(os.str());
  }
  const std::size_t d = displacement.dim();
  if (psi.dim() > d) throw DimensionError("measurement_distribution: state exceeds work space");
  const auto n = static_cast<Eigen::Index>(psi.dim());
  const CVector amp = displacement.matrix().leftCols(n) * psi.amplitudes();
  Checked<MeasurementDistribution> out;
  out.value.beta = beta;
  out.value.probabilities.resize(d);
  double total = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    double p = std::norm(amp(static_cast<Eigen::Index>(i)));
    total += p;
    out.value.probabilities[i] = std::max(p, 0.0);
  }
  out.value.tail = 1.0 - total;
  if (out.value.tail > kTailWarn) {
    std::ostringstream os;
    os << "measurement_distribution: truncation tail " << out.value.tail << " exceeds " << kTailWarn;
    out.warnings.push_back(os.str());
  }
  return out;
}

double shannon_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

double shannon_entropy(const MeasurementDistribution& d) { return shannon_entropy(d.probabilities); }

OverlapBound overlap_bound_c(Complex beta1, Complex beta2, std::size_t n_max, std::size_t k_max) {
  const Complex delta = beta1 - beta2;
  const double x = std::norm(delta);
  if (static_cast<double>(std::min(n_max, k_max)) < 3.0 * x) {
    std::ostringstream os;
    os << "overlap_bound_c: window " << n_max << "x" << k_max << " does not cover 3|dbeta|^2 = "
       << 3.0 * x << " levels";
    throw DomainError(os.str());
  }
  // Entry (k, n) of the window is <k|D(delta)|n>; the recurrence route stays
  // accurate across the whole window.
  const TruncatedFockSpace window(std::max(n_max, k_max) + 1);
  const CMatrix m = displacement_matrix(delta, window, DisplacementMethod::laguerre).value.matrix();
  OverlapBound best{-1.0, 0, 0};
  for (std::size_t n = 0; n <= n_max; ++n)
    for (std::size_t k = 0; k <= k_max; ++k) {
      double v = std::abs(m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(n)));
      if (v > best.c) best = {v, static_cast<long>(n), static_cast<long>(k)};
    }
  return best;
}

double cnk_max_formula(double x) {
  if (x < 0.0) throw DomainError("cnk_max_formula: |beta|^2 must be >= 0");
  if (x == 0.0) return 1.0;
  return std::exp(-0.5 * x + 0.5 * x * std::log(x) - 0.5 * std::lgamma(x + 1.0));
}

double stirling_bound(double x) {
  if (!(x > 0.0)) throw DomainError("stirling_bound: |beta|^2 must be > 0");
  const double log_num = -0.5 * x + 0.5 * x * std::log(x);
  const double log_stirling = 0.5 * std::log(2.0 * std::numbers::pi * x) + x * (std::log(x) - 1.0);
  return std::exp(log_num - 0.5 * log_stirling);
}

double simplified_bound(double x) {
  if (!(x > 0.0)) throw DomainError("simplified_bound: |beta|^2 must be > 0");
  return std::pow(2.0 * std::numbers::pi * x, -0.25);
}

double mu_bound(Complex beta1, Complex beta2) {
  const double x = std::norm(beta1 - beta2);
  if (x == 0.0) return 0.0;
  return std::max(0.0, 0.5 * std::log2(2.0 * std::numbers::pi * x));
}

MuVerifier::MuVerifier(Complex beta1, Complex beta2, std::size_t state_dim, std::size_t work_dim)
    : beta1_(beta1),
      beta2_(beta2),
      d1_(displacement_or_throw(
          beta1, TruncatedFockSpace(work_dim ? work_dim : auto_work_dim(beta1, beta2, state_dim)))),
      d2_(displacement_or_throw(beta2, d1_.space())) {
  if (state_dim > d1_.dim()) throw DimensionError("MuVerifier: work space smaller than state");
}

MuCheck MuVerifier::verify(const StateVector& psi) const {
  auto p = measurement_distribution(psi, beta1_, d1_);
  auto q = measurement_distribution(psi, beta2_, d2_);
  MuCheck out;
  out.tail = std::max(p.value.tail, q.value.tail);
  if (out.tail >= kTailRefuse) {
    std::ostringstream os;
    os << "verify_mu: truncation tail " << out.tail << " >= " << kTailRefuse
       << "; entropies are not defined on the truncated distribution";
    throw TruncationError(os.str());
  }
  out.h_p = shannon_entropy(p.value);
  out.h_q = shannon_entropy(q.value);
  out.bound = mu_bound(beta1_, beta2_);
  out.slack = out.h_p + out.h_q - out.bound;
  return out;
}

MuCheck verify_mu(const StateVector& psi, Complex beta1, Complex beta2, std::size_t work_dim) {
  return MuVerifier(beta1, beta2, psi.dim(), work_dim).verify(psi);
}

std::vector<ConjectureRecord> conjecture_scan(const std::vector<double>& abs_grid,
                                              std::size_t phases, std::size_t window) {
  if (phases == 0 || window == 0) throw DomainError("conjecture_scan: empty grid");
  std::vector<ConjectureRecord> out;
  const TruncatedFockSpace space(window);
  for (double a : abs_grid) {
    for (std::size_t p = 0; p < phases; ++p) {
      const double phase = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(phases);
      const CMatrix m =
          displacement_matrix(std::polar(a, phase), space, DisplacementMethod::laguerre).value.matrix();
      ConjectureRecord rec;
      rec.abs_beta = a;
      rec.phase = phase;
      rec.c = -1.0;
      const auto w = static_cast<Eigen::Index>(window);
      for (Eigen::Index n = 0; n < w; ++n)
        for (Eigen::Index k = 0; k < w; ++k) {
          const double v = std::abs(m(k, n));
          if (n == 0 || k == 0)
            rec.edge_max = std::max(rec.edge_max, v);
          else
            rec.interior_max = std::max(rec.interior_max, v);
          if (v > rec.c) {
            rec.c = v;
            rec.n = static_cast<long>(n);
            rec.k = static_cast<long>(k);
          }
        }
      rec.on_edge = rec.interior_max <= rec.edge_max * (1.0 + 1e-12);
      out.push_back(rec);
    }
  }
  return out;
}

StateVector haar_random_state(TruncatedFockSpace space, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector v(static_cast<Eigen::Index>(space.dim()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = Complex(re, im);
  }
  return StateVector(space, v / v.norm());
}

}  // namespace mzbell
