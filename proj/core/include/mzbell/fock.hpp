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

#ifndef MZBELL_FOCK_HPP_
#define MZBELL_FOCK_HPP_

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "mzbell/error.hpp"

namespace mzbell {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

// Largest composite dimension accepted by tensor_product.
inline constexpr std::size_t kMaxStateDim = 1u << 16;
inline constexpr std::size_t kMaxOperatorDim = 4096;

// Occupancy levels 0..dim-1 of one mode, or a composite index space.
class TruncatedFockSpace {
 public:
  explicit TruncatedFockSpace(std::size_t dim);

  std::size_t dim() const { return dim_; }
  bool operator==(const TruncatedFockSpace&) const = default;

 private:
  std::size_t dim_;
};

class StateVector {
 public:
  StateVector(TruncatedFockSpace space, CVector amplitudes);

  static StateVector basis(TruncatedFockSpace space, std::size_t n);

  const TruncatedFockSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const CVector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

  double norm() const { return amplitudes_.norm(); }
  // |norm - 1|; states are never normalized behind the caller's back.
  double norm_deviation() const;
  StateVector normalized() const;

 private:
  TruncatedFockSpace space_;
  CVector amplitudes_;
};

class LinearOperator {
 public:
  LinearOperator(TruncatedFockSpace space, CMatrix matrix);

  static LinearOperator identity(TruncatedFockSpace space);

  const TruncatedFockSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const CMatrix& matrix() const { return matrix_; }

  StateVector apply(const StateVector& psi) const;
  LinearOperator adjoint() const;

 private:
  TruncatedFockSpace space_;
  CMatrix matrix_;
};

// ||A - A^dag||_F / ||A||_F (absolute when A = 0).
double hermiticity_deviation(const CMatrix& a);

class DensityOperator {
 public:
  // Rejects matrices whose relative Hermiticity deviation exceeds tol.
  DensityOperator(TruncatedFockSpace space, CMatrix matrix, double tol = 1e-12);

  static DensityOperator from_pure(const StateVector& psi);

  const TruncatedFockSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const CMatrix& matrix() const { return matrix_; }

  double trace() const { return matrix_.trace().real(); }
  double min_eigenvalue() const;
  RVector eigenvalues() const;

 private:
  TruncatedFockSpace space_;
  CMatrix matrix_;
};

// Composite index of (i, j) is i * dim_b + j.
StateVector tensor_product(const StateVector& a, const StateVector& b,
                           std::size_t max_dim = kMaxStateDim);
LinearOperator tensor_product(const LinearOperator& a, const LinearOperator& b,
                              std::size_t max_dim = kMaxOperatorDim);
DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b,
                               std::size_t max_dim = kMaxOperatorDim);

enum class Subsystem { first, second };

struct ProductDims {
  std::size_t first;
  std::size_t second;
};

DensityOperator partial_trace(const DensityOperator& rho, Subsystem keep, ProductDims dims);

// Reduction of |psi><psi| without forming the composite density matrix.
DensityOperator reduce_pure_state(const StateVector& psi, Subsystem keep, ProductDims dims);

struct Eigensystem {
  RVector values;   // ascending
  CMatrix vectors;  // orthonormal columns
};

Eigensystem hermitian_eigensystem(const CMatrix& a, double tol = 1e-10);
Eigensystem hermitian_eigensystem(const LinearOperator& op, double tol = 1e-10);

// Tr(a^dag b).
Complex hs_inner(const LinearOperator& a, const LinearOperator& b);

// Eigenvalues below zero are clamped; 0 log 0 = 0.
double von_neumann_entropy_bits(const DensityOperator& rho);

}  // namespace mzbell

#endif  // MZBELL_FOCK_HPP_
