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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mzbell/optics.hpp"
#include "wide_float.hpp"

namespace mzbell {
namespace {

using detail::kEpsLong;
using detail::kEpsQuad;
using detail::quad;

// Entries whose absolute rounding error estimate stays above this after the
// quad-precision retry are reported.
constexpr double kResidualTol = 1e-12;
// Long double results with a larger error estimate are recomputed in quad,
// unless even quad cannot bring the estimate below kHopeless.
constexpr long double kRetryTol = 1e-15L;
constexpr double kHopeless = 1e-3;

// Phase-free part of <k|D(beta)|n>:
//   sum_i (-1)^{n-i} sqrt(n! k!) / (i! (n-i)! (k-i)!) r^{n+k-2i} e^{-r^2/2}.
// The i = 0 term is assembled from log-Gamma values and exponentiated once;
// later terms follow from the exact ratio (n-i)(k-i) / ((i+1) r^2).
class DirectSum {
 public:
  DirectSum(std::size_t levels, double r)
      : r_(r), log_r_(std::log(static_cast<long double>(r))),
        x_(static_cast<long double>(r) * r), lf_(detail::log_factorials_ld(levels)) {}

  long double eval(long n, long k, bool* unresolved) {
    const long m = std::min(n, k);
    const long double l0 = -0.5L * (lf_[n] + lf_[k]) +
                           static_cast<long double>(n + k) * log_r_ - 0.5L * x_;
    long double t = std::exp(l0);
    long double sum = 0.0L, abs_sum = 0.0L;
    for (long i = 0;; ++i) {
      sum += ((n - i) & 1) ? -t : t;
      abs_sum += t;
      if (i == m) break;
      t *= static_cast<long double>(n - i) * static_cast<long double>(k - i) /
           (static_cast<long double>(i + 1) * x_);
    }
    long double scale = abs_sum * (8.0L + std::fabs(l0) + 2.0L * m);
    if (scale * kEpsLong <= kRetryTol) return sum;
    if (static_cast<double>(scale) * kEpsQuad > kHopeless) {
      if (unresolved) *unresolved = true;
      return sum;
    }
    return eval_quad(n, k, unresolved);
  }

 private:
  long double eval_quad(long n, long k, bool* unresolved) {
    if (lfq_.empty()) {
      lfq_ = detail::log_factorials_q(lf_.size());
      log_rq_ = logq(static_cast<quad>(r_));
      xq_ = static_cast<quad>(r_) * static_cast<quad>(r_);
      inv_q_.resize(lf_.size());
      for (std::size_t i = 0; i < inv_q_.size(); ++i) inv_q_[i] = 1 / (static_cast<quad>(i + 1) * xq_);
    }
    const long m = std::min(n, k);
    const quad l0 = -(lfq_[n] + lfq_[k]) / 2 + static_cast<quad>(n + k) * log_rq_ - xq_ / 2;
    quad t = expq(l0);
    quad sum = 0, abs_sum = 0;
    for (long i = 0;; ++i) {
      sum += ((n - i) & 1) ? -t : t;
      abs_sum += t;
      if (i == m) break;
      t = t * static_cast<quad>((n - i) * (k - i)) * inv_q_[i];
    }
    double err = static_cast<double>(abs_sum * (8 + fabsq(l0) + 2 * m)) * kEpsQuad;
    if (err > kResidualTol && unresolved) *unresolved = true;
    return static_cast<long double>(sum);
  }

  double r_;
  long double log_r_;
  long double x_;
  std::vector<long double> lf_;
  std::vector<quad> lfq_;
  std::vector<quad> inv_q_;
  quad log_rq_ = 0;
  quad xq_ = 0;
};

Complex phase_factor(double theta, long power) {
  return std::polar(1.0, theta * static_cast<double>(power));
}

CMatrix build_direct(double r, double theta, std::size_t d, std::size_t* unresolved) {
  DirectSum sum(d, r);
  const auto n_dim = static_cast<long>(d);
  CMatrix out(n_dim, n_dim);
  for (long n = 0; n < n_dim; ++n) {
    for (long k = 0; k < n_dim; ++k) {
      bool bad = false;
      double v = static_cast<double>(sum.eval(n, k, &bad));
      if (bad) ++*unresolved;
      out(k, n) = v * phase_factor(theta, k - n);
    }
  }
  return out;
}

// D = e^{-|b|^2/2} U(b^*)^dag U(-b^*), U(b)[i, n] = sqrt(n!/i!) b^{n-i} / (n-i)!.
CMatrix build_factorized(double r, double theta, std::size_t d, std::size_t* unresolved) {
  using cld = std::complex<long double>;
  using CMatL = Eigen::Matrix<cld, Eigen::Dynamic, Eigen::Dynamic>;
  using RMatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const auto n_dim = static_cast<Eigen::Index>(d);
  const auto lf = detail::log_factorials_ld(d);
  const long double log_r = std::log(static_cast<long double>(r));
  const long double quarter_x = 0.25L * static_cast<long double>(r) * r;

  CMatL u1 = CMatL::Zero(n_dim, n_dim);  // U(b^*)
  CMatL u2 = CMatL::Zero(n_dim, n_dim);  // U(-b^*)
  RMatL mag = RMatL::Zero(n_dim, n_dim);
  long double max_log = 0.0L;
  for (Eigen::Index n = 0; n < n_dim; ++n) {
    for (Eigen::Index i = 0; i <= n; ++i) {
      long double l = 0.5L * (lf[n] - lf[i]) - lf[n - i] +
                      static_cast<long double>(n - i) * log_r - quarter_x;
      long double a = std::exp(l);
      long double ph = -static_cast<long double>(theta) * static_cast<long double>(n - i);
      cld u = std::polar(a, ph);
      u1(i, n) = u;
      u2(i, n) = ((n - i) & 1) ? -u : u;
      mag(i, n) = a;
      max_log = std::max(max_log, std::fabs(l));
    }
  }
  CMatL prod = u1.triangularView<Eigen::Upper>().adjoint() * u2;
  RMatL abs_prod = mag.triangularView<Eigen::Upper>().transpose() * mag;

  CMatrix out(n_dim, n_dim);
  std::vector<quad> lfq;
  Eigen::Matrix<quad, Eigen::Dynamic, Eigen::Dynamic> magq;
  for (Eigen::Index n = 0; n < n_dim; ++n) {
    for (Eigen::Index k = 0; k < n_dim; ++k) {
      long double scale = abs_prod(k, n) * (8.0L + max_log + static_cast<long double>(d));
      if (scale * kEpsLong <= kRetryTol || static_cast<double>(scale) * kEpsQuad > kHopeless) {
        if (scale * kEpsLong > kResidualTol) ++*unresolved;
        out(k, n) = Complex(static_cast<double>(prod(k, n).real()),
                            static_cast<double>(prod(k, n).imag()));
        continue;
      }
      if (lfq.empty()) {
        lfq = detail::log_factorials_q(d);
        const quad log_rq = logq(static_cast<quad>(r));
        const quad qx = static_cast<quad>(r) * static_cast<quad>(r) / 4;
        magq.setZero(n_dim, n_dim);
        for (Eigen::Index c = 0; c < n_dim; ++c)
          for (Eigen::Index i = 0; i <= c; ++i)
            magq(i, c) = expq((lfq[c] - lfq[i]) / 2 - lfq[c - i] + static_cast<quad>(c - i) * log_rq - qx);
      }
      // Column phases factor out as e^{i theta (k - n)}.
      quad sum = 0, abs_sum = 0;
      for (Eigen::Index i = 0; i <= std::min(n, k); ++i) {
        quad t = magq(i, k) * magq(i, n);
        sum += ((n - i) & 1) ? -t : t;
        abs_sum += t;
      }
      double err_q = static_cast<double>(abs_sum * (8 + static_cast<quad>(max_log) + static_cast<quad>(d))) * kEpsQuad;
      if (err_q > kResidualTol) ++*unresolved;
      out(k, n) = static_cast<double>(sum) * phase_factor(theta, static_cast<long>(k - n));
    }
  }
  return out;
}

// <j+a|D|j> = e^{i theta a} g_j and <j|D|j+a> = (-e^{-i theta})^a g_j with
// g_j = r^a e^{-x/2} sqrt(j!/(j+a)!) L_j^{(a)}(x), x = r^2. The normalised
// three-term recurrence in j runs on v_j = g_j e^{-s} with a running log scale s.
CMatrix build_laguerre(double r, double theta, std::size_t d) {
  const auto n_dim = static_cast<long>(d);
  const double x = r * r;
  const double log_r = std::log(r);
  CMatrix out = CMatrix::Zero(n_dim, n_dim);
  for (long a = 0; a < n_dim; ++a) {
    const long len = n_dim - a;
    double s = (a == 0 ? 0.0 : a * log_r) - 0.5 * x - 0.5 * std::lgamma(a + 1.0);
    const Complex up = phase_factor(theta, a);
    const Complex down = ((a & 1) ? -1.0 : 1.0) * phase_factor(theta, -a);
    double v_prev = 0.0;
    double v = 1.0;
    for (long j = 0; j < len; ++j) {
      double g = v * std::exp(s);
      out(j + a, j) = g * up;
      if (a > 0) out(j, j + a) = g * down;
      double v_next;
      if (j == 0) {
        v_next = (1.0 + a - x) / std::sqrt(1.0 + a);
      } else {
        v_next = ((2.0 * j + 1.0 + a - x) * v - std::sqrt(static_cast<double>(j) * (j + a)) * v_prev) /
                 std::sqrt((j + 1.0) * (j + 1.0 + a));
      }
      v_prev = v;
      v = v_next;
      if (std::fabs(v) > 1e100) {
        v *= 1e-100;
        v_prev *= 1e-100;
        s += 100.0 * std::log(10.0);
      }
    }
  }
  return out;
}

}  // namespace

const char* to_string(DisplacementMethod m) {
  switch (m) {
    case DisplacementMethod::direct: return "direct";
    case DisplacementMethod::factorized: return "factorized";
    case DisplacementMethod::laguerre: return "laguerre";
  }
  return "unknown";
}

Complex displacement_coefficient(long n, long k, Complex beta) {
  if (n < 0 || k < 0) throw DomainError("displacement_coefficient: negative Fock index");
  if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag()))
    throw DomainError("displacement_coefficient: non-finite amplitude");
  const double r = std::abs(beta);
  if (r == 0.0) return n == k ? Complex(1.0) : Complex(0.0);
  DirectSum sum(static_cast<std::size_t>(std::max(n, k)) + 1, r);
  bool unresolved = false;
  double v = static_cast<double>(sum.eval(n, k, &unresolved));
  return v * phase_factor(std::arg(beta), k - n);
}

Checked<LinearOperator> displacement_matrix(Complex beta, TruncatedFockSpace space,
                                            DisplacementMethod method) {
  if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag()))
    throw DomainError("displacement_matrix: non-finite amplitude");
  const std::size_t d = space.dim();
  const double r = std::abs(beta);
  const double theta = std::arg(beta);
  std::vector<std::string> warnings;
  if (r * r >= 0.5 * static_cast<double>(d)) {
    std::ostringstream os;
    os << "displacement_matrix: |beta|^2 = " << r * r << " >= dim/2 = " << 0.5 * d
       << "; truncation error dominates most of the matrix";
    warnings.push_back(os.str());
  }
  if (r == 0.0) return {LinearOperator::identity(space), std::move(warnings)};

  std::size_t unresolved = 0;
  CMatrix m;
  switch (method) {
    case DisplacementMethod::direct: m = build_direct(r, theta, d, &unresolved); break;
    case DisplacementMethod::factorized: m = build_factorized(r, theta, d, &unresolved); break;
    case DisplacementMethod::laguerre: m = build_laguerre(r, theta, d); break;
  }
  if (unresolved > 0) {
    std::ostringstream os;
    os << "displacement_matrix(" << to_string(method) << "): " << unresolved
       << " entries have estimated cancellation error above " << kResidualTol;
    warnings.push_back(os.str());
  }
  return {LinearOperator(space, std::move(m)), std::move(warnings)};
}

std::size_t interior_limit(std::size_t dim, double abs_beta) {
  if (dim == 0) throw DimensionError("interior_limit: dim must be >= 1");
  const auto margin = static_cast<std::size_t>(
      std::ceil(4.0 * std::fabs(abs_beta) * std::sqrt(static_cast<double>(dim))));
  if (margin >= dim) return 0;
  return std::min(dim - margin, dim - 1);
}

StateVector coherent_state(Complex beta, TruncatedFockSpace space) {
  return gcs_state(0, beta, space);
}

StateVector gcs_state(std::size_t n, Complex beta, TruncatedFockSpace space) {
  if (n >= space.dim()) throw DomainError("gcs_state: level outside truncation");
  const auto d = static_cast<long>(space.dim());
  CVector v(d);
  const double r = std::abs(beta);
  if (r == 0.0) return StateVector::basis(space, n);
  DirectSum sum(space.dim(), r);
  const double theta = std::arg(beta);
  for (long k = 0; k < d; ++k) {
    bool unresolved = false;
    v(k) = static_cast<double>(sum.eval(static_cast<long>(n), k, &unresolved)) *
           phase_factor(theta, k - static_cast<long>(n));
  }
  return StateVector(space, std::move(v));
}

}  // namespace mzbell
