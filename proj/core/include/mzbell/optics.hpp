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

#ifndef MZBELL_OPTICS_HPP_
#define MZBELL_OPTICS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "mzbell/error.hpp"
#include "mzbell/fock.hpp"

namespace mzbell {

// Output annihilation operators (a4, a5) = [[t', r], [r', t]] (a2, a3).
struct BeamSplitterParams {
  Complex r;
  Complex t;
  Complex r_prime;
  Complex t_prime;
};

// Names of the violated Stokes laws; empty when all hold to tol.
std::vector<std::string> stokes_violations(const BeamSplitterParams& p, double tol = 1e-9);

// Throws DomainError naming each violated law.
Eigen::Matrix2cd beam_splitter_matrix(const BeamSplitterParams& p);

struct MziSettings {
  double phi;    // arm phase
  double gamma;  // relative phase of the two beam splitters
};

struct MziTwoPort {
  Eigen::Matrix2cd matrix;
  Complex R;  // equals R'
  Complex T;
  Complex T_prime;
};

MziTwoPort mzi_two_port(const MziSettings& s);

// <k| D(beta) |n> with D(beta) = exp(beta a^dag - beta^* a).
Complex displacement_coefficient(long n, long k, Complex beta);

enum class DisplacementMethod { direct, factorized, laguerre };

const char* to_string(DisplacementMethod m);

// Entry (k, n) is <k|D(beta)|n>. Warnings flag a truncation too small for
// |beta| and entries whose rounding error could not be held below 1e-12.
Checked<LinearOperator> displacement_matrix(Complex beta, TruncatedFockSpace space,
                                            DisplacementMethod method = DisplacementMethod::direct);

// Largest index of the block where truncation error is negligible:
// dim - ceil(4 |beta| sqrt(dim)), clamped to [0, dim - 1].
std::size_t interior_limit(std::size_t dim, double abs_beta);

StateVector coherent_state(Complex beta, TruncatedFockSpace space);

// D(beta)|n>, truncated to space.
StateVector gcs_state(std::size_t n, Complex beta, TruncatedFockSpace space);

}  // namespace mzbell

#endif  // MZBELL_OPTICS_HPP_
