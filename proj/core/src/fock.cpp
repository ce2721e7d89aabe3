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

#include "mzbell/fock.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace mzbell {
namespace {

std::string dim_message(const char* op, std::size_t a, std::size_t b) {
  std::ostringstream os;
  os << op << ": dimension mismatch (" << a << " vs " << b << ")";
  return os.str();
}

void require_same_space(const char* op, const TruncatedFockSpace& a,
                        const TruncatedFockSpace& b) {
  if (a.dim() != b.dim()) throw DimensionError(dim_message(op, a.dim(), b.dim()));
}

std::size_t checked_product(std::size_t a, std::size_t b, std::size_t max_dim) {
  if (a != 0 && b > max_dim / a) {
    std::ostringstream os;
    os << "tensor_product: composite dimension " << a << "x" << b
       << " exceeds configured maximum " << max_dim;
    throw DimensionError(os.str());
  }
  return a * b;
}

void require_finite(const char* what, const CMatrix& m) {
  if (!m.allFinite()) throw DomainError(std::string(what) + ": non-finite entries");
}

}  // namespace

TruncatedFockSpace::TruncatedFockSpace(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw DimensionError("TruncatedFockSpace: dim must be >= 1");
}

StateVector::StateVector(TruncatedFockSpace space, CVector amplitudes)
    : space_(space), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != space_.dim())
    throw DimensionError(dim_message("StateVector", amplitudes_.size(), space_.dim()));
  if (!amplitudes_.allFinite()) throw DomainError("StateVector: non-finite amplitudes");
}

StateVector StateVector::basis(TruncatedFockSpace space, std::size_t n) {
  if (n >= space.dim()) throw DomainError("StateVector::basis: level outside truncation");
  CVector v = CVector::Zero(static_cast<Eigen::Index>(space.dim()));
  v(static_cast<Eigen::Index>(n)) = 1.0;
  return StateVector(space, std::move(v));
}

double StateVector::norm_deviation() const { return std::abs(norm() - 1.0); }

StateVector StateVector::normalized() const {
  double n = norm();
  if (n == 0.0) throw DomainError("StateVector::normalized: zero vector");
  return StateVector(space_, amplitudes_ / n);
}

LinearOperator::LinearOperator(TruncatedFockSpace space, CMatrix matrix)
    : space_(space), matrix_(std::move(matrix)) {
  auto d = static_cast<Eigen::Index>(space_.dim());
  if (matrix_.rows() != d || matrix_.cols() != d)
    throw DimensionError(dim_message("LinearOperator", matrix_.rows(), space_.dim()));
  require_finite("LinearOperator", matrix_);
}

LinearOperator LinearOperator::identity(TruncatedFockSpace space) {
  auto d = static_cast<Eigen::Index>(space.dim());
  return LinearOperator(space, CMatrix::Identity(d, d));
}

StateVector LinearOperator::apply(const StateVector& psi) const {
  require_same_space("LinearOperator::apply", space_, psi.space());
  return StateVector(space_, matrix_ * psi.amplitudes());
}

LinearOperator LinearOperator::adjoint() const {
  return LinearOperator(space_, matrix_.adjoint());
}

double hermiticity_deviation(const CMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("hermiticity_deviation: matrix not square");
  double diff = (a - a.adjoint()).norm();
  double scale = a.norm();
  return scale > 0.0 ? diff / scale : diff;
}

DensityOperator::DensityOperator(TruncatedFockSpace space, CMatrix matrix, double tol)
    : space_(space), matrix_(std::move(matrix)) {
  auto d = static_cast<Eigen::Index>(space_.dim());
  if (matrix_.rows() != d || matrix_.cols() != d)
    throw DimensionError(dim_message("DensityOperator", matrix_.rows(), space_.dim()));
  require_finite("DensityOperator", matrix_);
  double dev = hermiticity_deviation(matrix_);
  if (dev > tol) {
    std::ostringstream os;
    os << "DensityOperator: Hermiticity deviation " << dev << " exceeds " << tol;
    throw NotHermitianError(os.str(), dev);
  }
}

DensityOperator DensityOperator::from_pure(const StateVector& psi) {
  const CVector& v = psi.amplitudes();
  CMatrix m = v * v.adjoint();
  return DensityOperator(psi.space(), 0.5 * (m + m.adjoint()));
}

RVector DensityOperator::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(matrix_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double DensityOperator::min_eigenvalue() const { return eigenvalues().minCoeff(); }

StateVector tensor_product(const StateVector& a, const StateVector& b, std::size_t max_dim) {
  std::size_t d = checked_product(a.dim(), b.dim(), max_dim);
  CVector v(static_cast<Eigen::Index>(d));
  auto db = static_cast<Eigen::Index>(b.dim());
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i)
    v.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
  return StateVector(TruncatedFockSpace(d), std::move(v));
}

namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

LinearOperator tensor_product(const LinearOperator& a, const LinearOperator& b,
                              std::size_t max_dim) {
  std::size_t d = checked_product(a.dim(), b.dim(), max_dim);
  return LinearOperator(TruncatedFockSpace(d), kron(a.matrix(), b.matrix()));
}

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b,
                               std::size_t max_dim) {
  std::size_t d = checked_product(a.dim(), b.dim(), max_dim);
  CMatrix m = kron(a.matrix(), b.matrix());
  return DensityOperator(TruncatedFockSpace(d), 0.5 * (m + m.adjoint()));
}

DensityOperator partial_trace(const DensityOperator& rho, Subsystem keep, ProductDims dims) {
  if (dims.first == 0 || dims.second == 0 || dims.first * dims.second != rho.dim())
    throw DimensionError(
        dim_message("partial_trace", dims.first * dims.second, rho.dim()));
  auto d1 = static_cast<Eigen::Index>(dims.first);
  auto d2 = static_cast<Eigen::Index>(dims.second);
  const CMatrix& m = rho.matrix();
  CMatrix out;
  if (keep == Subsystem::first) {
    out = CMatrix::Zero(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i)
      for (Eigen::Index ip = 0; ip < d1; ++ip)
        for (Eigen::Index j = 0; j < d2; ++j) out(i, ip) += m(i * d2 + j, ip * d2 + j);
  } else {
    out = CMatrix::Zero(d2, d2);
    for (Eigen::Index i = 0; i < d1; ++i)
      out += m.block(i * d2, i * d2, d2, d2);
  }
  return DensityOperator(TruncatedFockSpace(static_cast<std::size_t>(out.rows())),
                         0.5 * (out + out.adjoint()), 1e-10);
}

DensityOperator reduce_pure_state(const StateVector& psi, Subsystem keep, ProductDims dims) {
  if (dims.first == 0 || dims.second == 0 || dims.first * dims.second != psi.dim())
    throw DimensionError(
        dim_message("reduce_pure_state", dims.first * dims.second, psi.dim()));
  auto d1 = static_cast<Eigen::Index>(dims.first);
  auto d2 = static_cast<Eigen::Index>(dims.second);
  // Row-major reshape: M(i, j) = psi[i * d2 + j].
  CMatrix m(d1, d2);
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index j = 0; j < d2; ++j) m(i, j) = psi.amplitudes()(i * d2 + j);
  CMatrix out = keep == Subsystem::first ? CMatrix(m * m.adjoint())
                                         : CMatrix((m.adjoint() * m).transpose());
  return DensityOperator(TruncatedFockSpace(static_cast<std::size_t>(out.rows())),
                         0.5 * (out + out.adjoint()), 1e-10);
}

Eigensystem hermitian_eigensystem(const CMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw DimensionError("hermitian_eigensystem: matrix not square");
  double dev = hermiticity_deviation(a);
  if (dev > tol) {
    std::ostringstream os;
    os << "hermitian_eigensystem: Hermiticity deviation " << dev << " exceeds " << tol;
    throw NotHermitianError(os.str(), dev);
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (a + a.adjoint()));
  if (es.info() != Eigen::Success) throw Error("hermitian_eigensystem: solver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigensystem hermitian_eigensystem(const LinearOperator& op, double tol) {
  return hermitian_eigensystem(op.matrix(), tol);
}

Complex hs_inner(const LinearOperator& a, const LinearOperator& b) {
  require_same_space("hs_inner", a.space(), b.space());
  return a.matrix().conjugate().cwiseProduct(b.matrix()).sum();
}

double von_neumann_entropy_bits(const DensityOperator& rho) {
  double h = 0.0;
  for (double p : rho.eigenvalues()) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

}  // namespace mzbell
