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

#include "mzbell/channel.hpp"

#include <cmath>
#include <sstream>

namespace mzbell {
namespace {

constexpr double kTailWarn = 1e-6;

double sqrt_binomial(long n, long k) {
  return std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

std::vector<Complex> powers(Complex z, std::size_t count) {
  std::vector<Complex> out(count);
  Complex p = 1.0;
  for (auto& v : out) {
    v = p;
    p *= z;
  }
  return out;
}

void require_fits(const char* op, const char* what, double amp, std::size_t dim) {
  if (amp * amp + 4.0 * amp > static_cast<double>(dim)) {
    std::ostringstream os;
    os << op << ": " << what << " amplitude " << amp << " needs |a|^2 + 4|a| <= dim, got dim "
       << dim;
    throw TruncationError(os.str());
  }
}

void append(std::vector<std::string>& to, const std::vector<std::string>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

void require_input(const char* op, const StateVector& psi, const ChannelConfig& c) {
  if (psi.dim() > c.space.dim()) {
    std::ostringstream os;
    os << op << ": input dimension " << psi.dim() << " exceeds per-mode truncation "
       << c.space.dim();
    throw DimensionError(os.str());
  }
}

// P(l, m): amplitude of l photons in mode 4 and m in mode 5 before displacement.
CMatrix split_amplitudes(const StateVector& psi, const ChannelConfig& c) {
  const auto n = static_cast<long>(psi.dim());
  const auto tp = powers(c.T_prime, psi.dim());
  const auto rp = powers(c.R_prime, psi.dim());
  CMatrix p = CMatrix::Zero(n, n);
  for (long l = 0; l < n; ++l)
    for (long m = 0; l + m < n; ++m)
      p(l, m) = psi[static_cast<std::size_t>(l + m)] * sqrt_binomial(l + m, l) * tp[l] * rp[m];
  return p;
}

// Columns 0..count-1 of D(beta) on space.
CMatrix gcs_columns(Complex beta, TruncatedFockSpace space, std::size_t count) {
  CMatrix g(static_cast<Eigen::Index>(space.dim()), static_cast<Eigen::Index>(count));
  for (std::size_t l = 0; l < count; ++l)
    g.col(static_cast<Eigen::Index>(l)) = gcs_state(l, beta, space).amplitudes();
  return g;
}

std::string tail_warning(const char* op, double tail) {
  std::ostringstream os;
  os << op << ": truncation tail mass " << tail << " exceeds " << kTailWarn;
  return os.str();
}

}  // namespace

ChannelConfig ChannelConfig::make(Complex T, Complex R_prime, Complex alpha,
                                  TruncatedFockSpace space) {
  ChannelConfig c;
  c.T = T;
  c.R_prime = R_prime;
  c.T_prime = R_prime == Complex(0.0) ? std::conj(T) : -R_prime * std::conj(T) / std::conj(R_prime);
  c.alpha = alpha;
  c.space = space;
  c.i_max = default_i_max(T * alpha);
  c.unitary_consistent = std::abs(std::norm(R_prime) + std::norm(T) - 1.0) <= 1e-12;
  return c;
}

ChannelConfig ChannelConfig::from_mzi(const MziSettings& s, Complex alpha,
                                      TruncatedFockSpace space) {
  MziTwoPort m = mzi_two_port(s);
  ChannelConfig c = make(m.T, m.R, alpha, space);
  c.T_prime = m.T_prime;
  return c;
}

ChannelConfig ChannelConfig::from_moduli(double r_prime, double t, double alpha_scale,
                                         TruncatedFockSpace space, bool strict_unitarity) {
  if (!(t > 0.0)) throw DomainError("ChannelConfig::from_moduli: |T| must be positive");
  if (strict_unitarity) {
    if (t >= 1.0) throw DomainError("ChannelConfig::from_moduli: strict unitarity needs |T| < 1");
    r_prime = std::sqrt(1.0 - t * t);
  }
  if (!(r_prime >= 0.0)) throw DomainError("ChannelConfig::from_moduli: |R'| must be >= 0");
  return make(t, r_prime, alpha_scale / t, space);
}

std::size_t default_i_max(Complex t_alpha) {
  const double a = std::abs(t_alpha);
  return static_cast<std::size_t>(std::ceil(a * a + 6.0 * a + 10.0));
}

Checked<StateVector> two_mode_output_state(const StateVector& psi, const ChannelConfig& c) {
  require_input("two_mode_output_state", psi, c);
  require_fits("two_mode_output_state", "alpha", std::abs(c.alpha), c.space.dim());
  const CMatrix p = split_amplitudes(psi, c);
  const CMatrix out = gcs_columns(c.R() * c.alpha, c.space, psi.dim()) * p *
                      gcs_columns(c.t_alpha(), c.space, psi.dim()).transpose();
  const auto d = static_cast<Eigen::Index>(c.space.dim());
  CVector v(d * d);
  for (Eigen::Index i = 0; i < d; ++i) v.segment(i * d, d) = out.row(i).transpose();
  Checked<StateVector> res{StateVector(TruncatedFockSpace(c.space.dim() * c.space.dim()), v), {}};
  const double tail = p.squaredNorm() - v.squaredNorm();
  if (tail > kTailWarn) res.warnings.push_back(tail_warning("two_mode_output_state", tail));
  return res;
}

Checked<DensityOperator> reduced_detector_state(const StateVector& psi, const ChannelConfig& c) {
  require_input("reduced_detector_state", psi, c);
  require_fits("reduced_detector_state", "T alpha", std::abs(c.t_alpha()), c.space.dim());
  const CMatrix p = split_amplitudes(psi, c);
  // The mode-4 displacement is a local unitary on the discarded mode.
  const CMatrix q = p * gcs_columns(c.t_alpha(), c.space, psi.dim()).transpose();
  CMatrix rho = q.transpose() * q.conjugate();
  rho = 0.5 * (rho + rho.adjoint());
  Checked<DensityOperator> res{DensityOperator(c.space, rho), {}};
  const double tail = p.squaredNorm() - rho.trace().real();
  if (tail > kTailWarn) res.warnings.push_back(tail_warning("reduced_detector_state", tail));
  return res;
}

Checked<std::vector<LinearOperator>> kraus_set(const ChannelConfig& c) {
  require_fits("kraus_set", "R alpha", std::abs(c.R() * c.alpha), c.space.dim());
  require_fits("kraus_set", "T alpha", std::abs(c.t_alpha()), c.space.dim());
  auto d4 = displacement_matrix(c.R() * c.alpha, c.space);
  auto d5 = displacement_matrix(c.t_alpha(), c.space);
  std::vector<std::string> warnings;
  append(warnings, d4.warnings);
  append(warnings, d5.warnings);
  const CMatrix& u4 = d4.value.matrix();
  const CMatrix& u5 = d5.value.matrix();
  const auto d = static_cast<Eigen::Index>(c.space.dim());
  const auto tp = powers(c.T_prime, c.space.dim());
  const auto rp = powers(c.R_prime, c.space.dim());

  std::vector<CMatrix> e(static_cast<std::size_t>(d), CMatrix::Zero(d, d));
  CMatrix f(d, d);
  for (Eigen::Index l = 0; l < d; ++l) {
    // F_l(m, n) = b(n, l) D5(m, n - l), b(n, l) = sqrt(C(n, l)) T'^l R'^(n-l).
    f.setZero();
    for (Eigen::Index n = l; n < d; ++n)
      f.col(n) = (sqrt_binomial(n, l) * tp[l] * rp[n - l]) * u5.col(n - l);
    for (Eigen::Index k = 0; k < d; ++k) {
      const Complex w = u4(k, l);
      if (w != Complex(0.0)) e[static_cast<std::size_t>(k)].noalias() += w * f;
    }
  }
  std::vector<LinearOperator> ops;
  ops.reserve(e.size());
  for (auto& m : e) ops.emplace_back(c.space, std::move(m));
  return {std::move(ops), std::move(warnings)};
}

DensityOperator apply_kraus(const std::vector<LinearOperator>& kraus, const DensityOperator& rho) {
  if (kraus.empty()) throw DomainError("apply_kraus: empty Kraus set");
  const auto d = static_cast<Eigen::Index>(kraus.front().dim());
  if (rho.dim() > kraus.front().dim()) throw DimensionError("apply_kraus: input exceeds Kraus domain");
  CMatrix in = CMatrix::Zero(d, d);
  const auto r = static_cast<Eigen::Index>(rho.dim());
  in.topLeftCorner(r, r) = rho.matrix();
  CMatrix out = CMatrix::Zero(d, d);
  for (const auto& e : kraus) out.noalias() += e.matrix() * in * e.matrix().adjoint();
  return DensityOperator(kraus.front().space(), 0.5 * (out + out.adjoint()), 1e-10);
}

double kraus_completeness_deficit(const std::vector<LinearOperator>& kraus, std::size_t interior) {
  if (kraus.empty()) throw DomainError("kraus_completeness_deficit: empty Kraus set");
  const auto d = static_cast<Eigen::Index>(kraus.front().dim());
  CMatrix s = CMatrix::Zero(d, d);
  for (const auto& e : kraus) s.noalias() += e.matrix().adjoint() * e.matrix();
  s -= CMatrix::Identity(d, d);
  const auto b = std::min<Eigen::Index>(static_cast<Eigen::Index>(interior) + 1, d);
  return s.topLeftCorner(b, b).cwiseAbs().maxCoeff();
}

RMatrix gram_matrix(const PovmSet& povm) {
  const auto n = static_cast<Eigen::Index>(povm.effects.size());
  RMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) {
      g(i, j) = std::abs(hs_inner(povm.effects[static_cast<std::size_t>(j)],
                                  povm.effects[static_cast<std::size_t>(i)]));
      g(j, i) = g(i, j);
    }
  return g;
}

RMatrix log10_floor(const RMatrix& g, double floor) {
  RMatrix out(g.rows(), g.cols());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      double v = g(i, j) > 0.0 ? std::log10(g(i, j)) : floor;
      out(i, j) = std::max(v, floor);
    }
  return out;
}

double gram_offdiagonal_ratio(const RMatrix& g) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (i == j) continue;
      const double den = std::sqrt(g(i, i) * g(j, j));
      worst = std::max(worst, den > 0.0 ? g(i, j) / den : (g(i, j) > 0.0 ? INFINITY : 0.0));
    }
  return worst;
}

LinearOperator limit_projector(std::size_t i, const ChannelConfig& c) {
  const double r = std::abs(c.R_prime);
  if (r == 0.0) throw DomainError("limit_projector: R' = 0 has no projective limit");
  const Complex beta = -c.t_alpha() * std::conj(c.R_prime) / r;
  const CVector g = gcs_state(i, beta, c.space).amplitudes();
  return LinearOperator(c.space, g * g.adjoint());
}

double hs_distance(const LinearOperator& a, const LinearOperator& b) {
  if (a.dim() != b.dim()) throw DimensionError("hs_distance: dimension mismatch");
  return (a.matrix() - b.matrix()).norm();
}

Checked<double> output_entanglement_entropy(const StateVector& psi, const ChannelConfig& c) {
  auto out = two_mode_output_state(psi, c);
  const std::size_t d = c.space.dim();
  DensityOperator red = reduce_pure_state(out.value, Subsystem::second, {d, d});
  return {von_neumann_entropy_bits(red), std::move(out.warnings)};
}

}  // namespace mzbell
