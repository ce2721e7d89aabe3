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

#include "mzbell/chsh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mzbell/optics.hpp"

namespace mzbell {
namespace {

constexpr double kLn2Tol = 1e-9;
constexpr double kOptimumTol = 1e-12;
constexpr double kCoherentTail = 1e-8;
constexpr std::size_t kMinModeDim = 32;

LinearOperator as_operator(const RMatrix& m) {
  return LinearOperator(TruncatedFockSpace(static_cast<std::size_t>(m.rows())),
                        m.cast<Complex>());
}

double overlap_phase(Complex a, Complex b) { return (std::conj(a) * b).imag(); }

CVector coherent_checked(Complex beta, TruncatedFockSpace space, const char* label) {
  StateVector v = coherent_state(beta, space);
  const double tail = 1.0 - v.amplitudes().squaredNorm();
  if (tail > kCoherentTail) {
    std::ostringstream os;
    os << "coherent_state_form: truncation tail " << tail << " of " << label << " exceeds "
       << kCoherentTail;
    throw TruncationError(os.str());
  }
  return v.amplitudes() / v.norm();
}

// Orthonormal e1, e2 with e1 parallel to b1 and <e1|b2>, <e2|b2> real >= 0.
std::pair<CVector, CVector> lab_basis(const CVector& b1, const CVector& b2) {
  const Complex ov = b1.dot(b2);
  const double chi = std::abs(ov) > 0.0 ? std::arg(ov) : 0.0;
  CVector e1 = std::polar(1.0, chi) * b1;
  CVector r = b2 - e1.dot(b2) * e1;
  const double n = r.norm();
  if (n == 0.0) throw DomainError("coherent_state_form: settings of one lab coincide");
  return {e1, r / n};
}

CVector kron_vec(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

// A X B^T for A = I - 2 a a^dag, B = I - 2 b b^dag.
CMatrix reflect_both(const CMatrix& x, const CVector& a, const CVector& b) {
  CMatrix y = x - 2.0 * a * (a.adjoint() * x);
  return y - 2.0 * (y * b.conjugate()) * b.transpose();
}

// Orthonormal basis of span{b1, b2} plus one orthogonal direction.
CMatrix lab_frame(const CVector& b1, const CVector& b2) {
  const auto d = b1.size();
  CMatrix q(d, 3);
  q.col(0) = b1 / b1.norm();
  CVector r = b2 - q.col(0).dot(b2) * q.col(0);
  q.col(1) = r / r.norm();
  double best = -1.0;
  CVector pick;
  for (Eigen::Index i = 0; i < d; ++i) {
    CVector e = CVector::Zero(d);
    e(i) = 1.0;
    for (int c = 0; c < 2; ++c) e -= q.col(c).dot(e) * q.col(c);
    if (e.norm() > best) {
      best = e.norm();
      pick = e;
    }
  }
  q.col(2) = pick / pick.norm();
  return q;
}

}  // namespace

double ChshConfig::E1() const { return std::exp(-std::norm(beta1 - beta2)); }
double ChshConfig::E2() const { return std::exp(-std::norm(beta3 - beta4)); }
double ChshConfig::phi1() const { return overlap_phase(beta1, beta2); }
double ChshConfig::phi2() const { return overlap_phase(beta3, beta4); }

RMatrix observable_reference() {
  RMatrix a = RMatrix::Identity(3, 3);
  a(0, 0) = -1.0;
  return a;
}

RMatrix observable_matrix(double E) {
  if (!(E > 0.0 && E <= 1.0)) {
    std::ostringstream os;
    os << "observable_matrix: overlap E = " << E << " outside (0, 1]";
    throw DomainError(os.str());
  }
  const double off = -2.0 * std::sqrt(E * (1.0 - E));
  RMatrix a = RMatrix::Zero(3, 3);
  a(0, 0) = 1.0 - 2.0 * E;
  a(0, 1) = off;
  a(1, 0) = off;
  a(1, 1) = -1.0 + 2.0 * E;
  a(2, 2) = 1.0;
  return a;
}

LinearOperator chsh_operator(double E1, double E2) {
  const LinearOperator a1 = as_operator(observable_reference());
  const LinearOperator a2 = as_operator(observable_matrix(E1));
  const LinearOperator a3 = as_operator(observable_reference());
  const LinearOperator a4 = as_operator(observable_matrix(E2));
  const CMatrix s = tensor_product(a1, a3).matrix() + tensor_product(a2, a3).matrix() +
                    tensor_product(a1, a4).matrix() - tensor_product(a2, a4).matrix();
  return LinearOperator(TruncatedFockSpace(9), s);
}

LinearOperator chsh_operator(const ChshConfig& config) {
  return chsh_operator(config.E1(), config.E2());
}

const char* to_string(LambdaMethod m) {
  switch (m) {
    case LambdaMethod::eigensolver: return "eigensolver";
    case LambdaMethod::closed_form_paper: return "closed_form_paper";
    case LambdaMethod::closed_form_corrected: return "closed_form_corrected";
  }
  return "unknown";
}

double lambda_max(double E1, double E2, LambdaMethod method) {
  for (double e : {E1, E2})
    if (!(e > 0.0 && e <= 1.0)) throw DomainError("lambda_max: overlap outside (0, 1]");
  const double p1 = E1 * (1.0 - E1);
  const double p2 = E2 * (1.0 - E2);
  switch (method) {
    case LambdaMethod::eigensolver:
      return hermitian_eigensystem(chsh_operator(E1, E2)).values.maxCoeff();
    case LambdaMethod::closed_form_paper:
      return 2.0 * std::sqrt(1.0 + 4.0 * std::pow(p1, 0.25) * std::pow(p2, 0.25));
    case LambdaMethod::closed_form_corrected:
      return 2.0 * std::sqrt(1.0 + 4.0 * std::sqrt(p1) * std::sqrt(p2));
  }
  throw DomainError("lambda_max: unknown method");
}

OptimalSettings optimal_settings(std::size_t grid_n) {
  if (grid_n == 0) throw DomainError("optimal_settings: empty grid");
  OptimalSettings out;
  out.grid_n = grid_n;
  out.grid_lambda = -1.0;
  const double step = 1.0 / static_cast<double>(grid_n + 1);
  for (std::size_t i = 1; i <= grid_n; ++i)
    for (std::size_t j = 1; j <= grid_n; ++j) {
      const double e1 = static_cast<double>(i) * step;
      const double e2 = static_cast<double>(j) * step;
      const double lam = lambda_max(e1, e2, LambdaMethod::eigensolver);
      if (lam > out.grid_lambda) {
        out.grid_lambda = lam;
        out.grid_E1 = e1;
        out.grid_E2 = e2;
      }
      if (i == 1 || j == 1 || i == grid_n || j == grid_n)
        out.boundary_max = std::max(out.boundary_max, lam);
    }
  out.E1 = 0.5;
  out.E2 = 0.5;
  out.delta_beta_sq = std::numbers::ln2;
  out.lambda = lambda_max(0.5, 0.5, LambdaMethod::eigensolver);
  return out;
}

StateVector maximal_state(double E1, double E2) {
  if (std::abs(E1 - 0.5) > kOptimumTol || std::abs(E2 - 0.5) > kOptimumTol) {
    std::ostringstream os;
    os << "maximal_state: defined only at E1 = E2 = 1/2, got (" << E1 << ", " << E2 << ")";
    throw DomainError(os.str());
  }
  const double s2 = std::numbers::sqrt2;
  const double norm = 1.0 / (2.0 * std::sqrt(2.0 - s2));
  CVector v = CVector::Zero(9);
  v(0) = -norm;
  v(1) = (1.0 - s2) * norm;
  v(3) = (1.0 - s2) * norm;
  v(4) = norm;
  return StateVector(TruncatedFockSpace(9), v);
}

const char* to_string(CoherentForm f) {
  switch (f) {
    case CoherentForm::basis_construction: return "basis_construction";
    case CoherentForm::typeset_general: return "typeset_general";
    case CoherentForm::typeset_simplified: return "typeset_simplified";
  }
  return "unknown";
}

StateVector coherent_state_form(const ChshConfig& c, TruncatedFockSpace mode_space,
                                CoherentForm form) {
  for (double dsq : {std::norm(c.beta1 - c.beta2), std::norm(c.beta3 - c.beta4)}) {
    if (std::abs(dsq - std::numbers::ln2) > kLn2Tol) {
      std::ostringstream os;
      os << "coherent_state_form: |dbeta|^2 = " << dsq << " differs from ln 2";
      throw DomainError(os.str());
    }
  }
  if (mode_space.dim() < kMinModeDim) throw DimensionError("coherent_state_form: per-mode dim < 32");
  const CVector b1 = coherent_checked(c.beta1, mode_space, "beta1");
  const CVector b2 = coherent_checked(c.beta2, mode_space, "beta2");
  const CVector b3 = coherent_checked(c.beta3, mode_space, "beta3");
  const CVector b4 = coherent_checked(c.beta4, mode_space, "beta4");
  const TruncatedFockSpace two(mode_space.dim() * mode_space.dim());
  const double s2 = std::numbers::sqrt2;

  switch (form) {
    case CoherentForm::basis_construction: {
      const auto [ea1, ea2] = lab_basis(b1, b2);
      const auto [eb1, eb2] = lab_basis(b3, b4);
      const StateVector psi9 = maximal_state(0.5, 0.5);
      const CVector* ea[2] = {&ea1, &ea2};
      const CVector* eb[2] = {&eb1, &eb2};
      CVector out = CVector::Zero(static_cast<Eigen::Index>(two.dim()));
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          out += psi9[static_cast<std::size_t>(a * 3 + b)] * kron_vec(*ea[a], *eb[b]);
      return StateVector(two, out);
    }
    case CoherentForm::typeset_general: {
      const Complex ph1 = std::polar(1.0, c.phi1());
      const Complex ph2 = std::polar(1.0, c.phi2());
      const CVector left = (1.0 - ph1 - s2) * b1 + s2 * b2;
      const CVector right = (1.0 - ph2 - s2) * b3 + s2 * b4;
      const CVector out = (kron_vec(left, right) - 2.0 * (2.0 - s2) * kron_vec(b1, b3)) /
                          (2.0 * std::sqrt(2.0 - s2));
      return StateVector(two, out);
    }
    case CoherentForm::typeset_simplified: {
      if (std::abs(c.phi1()) > kOptimumTol || std::abs(c.phi2()) > kOptimumTol)
        throw DomainError("coherent_state_form: simplified form needs phi1 = phi2 = 0");
      const CVector out = (kron_vec(b1 - b2, b3 - b4) - (2.0 - s2) * kron_vec(b1, b3)) /
                          std::sqrt(2.0 - s2);
      return StateVector(two, out);
    }
  }
  throw DomainError("coherent_state_form: unknown form");
}

double fock_chsh_expectation(const StateVector& psi, const ChshConfig& c,
                             TruncatedFockSpace mode_space) {
  const auto d = static_cast<Eigen::Index>(mode_space.dim());
  if (psi.dim() != mode_space.dim() * mode_space.dim())
    throw DimensionError("fock_chsh_expectation: state is not on the two-mode space");
  CMatrix x(d, d);
  for (Eigen::Index i = 0; i < d; ++i) x.row(i) = psi.amplitudes().segment(i * d, d).transpose();
  const CVector b1 = coherent_state(c.beta1, mode_space).normalized().amplitudes();
  const CVector b2 = coherent_state(c.beta2, mode_space).normalized().amplitudes();
  const CVector b3 = coherent_state(c.beta3, mode_space).normalized().amplitudes();
  const CVector b4 = coherent_state(c.beta4, mode_space).normalized().amplitudes();
  auto term = [&](const CVector& a, const CVector& b) {
    return x.conjugate().cwiseProduct(reflect_both(x, a, b)).sum();
  };
  const Complex e = term(b1, b3) + term(b2, b3) + term(b1, b4) - term(b2, b4);
  return e.real();
}

LinearOperator fock_chsh_operator(const ChshConfig& c, TruncatedFockSpace mode_space) {
  auto reflection = [&](Complex beta) {
    const CVector b = coherent_state(beta, mode_space).normalized().amplitudes();
    const auto d = b.size();
    return LinearOperator(mode_space, CMatrix::Identity(d, d) - 2.0 * b * b.adjoint());
  };
  const LinearOperator a1 = reflection(c.beta1), a2 = reflection(c.beta2);
  const LinearOperator a3 = reflection(c.beta3), a4 = reflection(c.beta4);
  const CMatrix s = tensor_product(a1, a3).matrix() + tensor_product(a2, a3).matrix() +
                    tensor_product(a1, a4).matrix() - tensor_product(a2, a4).matrix();
  return LinearOperator(TruncatedFockSpace(mode_space.dim() * mode_space.dim()), s);
}

double fock_lambda_max(const ChshConfig& c, TruncatedFockSpace mode_space) {
  if (mode_space.dim() < 3) throw DimensionError("fock_lambda_max: per-mode dim must be >= 3");
  const CVector b1 = coherent_state(c.beta1, mode_space).normalized().amplitudes();
  const CVector b2 = coherent_state(c.beta2, mode_space).normalized().amplitudes();
  const CVector b3 = coherent_state(c.beta3, mode_space).normalized().amplitudes();
  const CVector b4 = coherent_state(c.beta4, mode_space).normalized().amplitudes();
  const CMatrix qa = lab_frame(b1, b2);
  const CMatrix qb = lab_frame(b3, b4);
  auto compress = [](const CMatrix& q, const CVector& b) {
    const CVector w = q.adjoint() * b;
    return LinearOperator(TruncatedFockSpace(3), CMatrix::Identity(3, 3) - 2.0 * w * w.adjoint());
  };
  const LinearOperator a1 = compress(qa, b1), a2 = compress(qa, b2);
  const LinearOperator a3 = compress(qb, b3), a4 = compress(qb, b4);
  const CMatrix s = tensor_product(a1, a3).matrix() + tensor_product(a2, a3).matrix() +
                    tensor_product(a1, a4).matrix() - tensor_product(a2, a4).matrix();
  return std::max(hermitian_eigensystem(s).values.maxCoeff(), 2.0);
}

}  // namespace mzbell
