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

#ifndef MZBELL_TESTS_HELPERS_HPP_
#define MZBELL_TESTS_HELPERS_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "mzbell/fock.hpp"

namespace mzbell::testing {

inline std::mt19937_64 seeded(std::uint64_t salt) { return std::mt19937_64(0x6d7a62656c6cULL ^ salt); }

inline CVector random_vector(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector v(static_cast<Eigen::Index>(dim));
  for (auto& z : v) z = Complex(g(rng), g(rng));
  return v;
}

inline StateVector random_state(std::size_t dim, std::mt19937_64& rng) {
  CVector v = random_vector(dim, rng);
  return StateVector(TruncatedFockSpace(dim), v / v.norm());
}

inline CMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  const auto d = static_cast<Eigen::Index>(dim);
  CMatrix a(d, d);
  for (Eigen::Index j = 0; j < d; ++j) a.col(j) = random_vector(dim, rng);
  return 0.5 * (a + a.adjoint());
}

inline DensityOperator random_density(std::size_t dim, std::mt19937_64& rng) {
  const auto d = static_cast<Eigen::Index>(dim);
  CMatrix a(d, d);
  for (Eigen::Index j = 0; j < d; ++j) a.col(j) = random_vector(dim, rng);
  CMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return DensityOperator(TruncatedFockSpace(dim), 0.5 * (rho + rho.adjoint()));
}

inline Complex random_amplitude(double max_abs, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> r(0.0, max_abs), ph(0.0, 2.0 * 3.141592653589793);
  return std::polar(r(rng), ph(rng));
}

inline double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace mzbell::testing

#endif  // MZBELL_TESTS_HELPERS_HPP_
