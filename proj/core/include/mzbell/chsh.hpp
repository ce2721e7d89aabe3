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

#ifndef MZBELL_CHSH_HPP_
#define MZBELL_CHSH_HPP_

#include <cstddef>

#include "mzbell/error.hpp"
#include "mzbell/fock.hpp"

namespace mzbell {

// Displacements for lab A (beta1, beta2) and lab B (beta3, beta4).
struct ChshConfig {
  Complex beta1;
  Complex beta2;
  Complex beta3;
  Complex beta4;

  double E1() const;  // exp(-|beta1 - beta2|^2)
  double E2() const;  // exp(-|beta3 - beta4|^2)
  // Phases of the coherent overlaps: <beta1|beta2> = sqrt(E1) e^{i phi1}.
  double phi1() const;
  double phi2() const;
};

// A(beta) = I - 2|beta><beta| in the basis {e1, e2, e3} with e1 = beta1.
// diag(-1, 1, 1) for the first setting of a lab.
RMatrix observable_reference();
// Second setting at overlap E in (0, 1].
RMatrix observable_matrix(double E);

// A1 (x) A3 + A2 (x) A3 + A1 (x) A4 - A2 (x) A4 on C^3 (x) C^3, index a * 3 + b.
LinearOperator chsh_operator(double E1, double E2);
LinearOperator chsh_operator(const ChshConfig& config);

enum class LambdaMethod { eigensolver, closed_form_paper, closed_form_corrected };

const char* to_string(LambdaMethod m);

// closed_form_paper evaluates 2 sqrt(1 + 4 (E1(1-E1))^{1/4} (E2(1-E2))^{1/4})
// verbatim; closed_form_corrected uses square roots instead of fourth roots.
double lambda_max(double E1, double E2, LambdaMethod method);

struct OptimalSettings {
  double E1 = 0.0;
  double E2 = 0.0;
  double delta_beta_sq = 0.0;  // -ln E at the optimum
  double lambda = 0.0;
  std::size_t grid_n = 0;
  double grid_E1 = 0.0;  // grid argmax of the eigensolver lambda
  double grid_E2 = 0.0;
  double grid_lambda = 0.0;
  double boundary_max = 0.0;  // largest lambda on the outer ring of the grid
};

// Scans E_i = j / (grid_n + 1), j = 1..grid_n, with the eigensolver.
OptimalSettings optimal_settings(std::size_t grid_n = 99);

// The maximally violating 9-component vector at E1 = E2 = 1/2; throws elsewhere.
StateVector maximal_state(double E1, double E2);

enum class CoherentForm { basis_construction, typeset_general, typeset_simplified };

const char* to_string(CoherentForm f);

// Two-mode Fock vector (index i * dim + j) of the maximal state written with
// truncated coherent vectors. Requires |beta1 - beta2|^2 = |beta3 - beta4|^2 = ln 2,
// dim >= 32 and coherent truncation tails <= 1e-8. typeset_simplified requires
// phi1 = phi2 = 0.
StateVector coherent_state_form(const ChshConfig& config, TruncatedFockSpace mode_space,
                                CoherentForm form = CoherentForm::basis_construction);

// <Psi| S |Psi> with A(beta) = I - 2|beta><beta| acting on the truncated modes.
double fock_chsh_expectation(const StateVector& psi, const ChshConfig& config,
                             TruncatedFockSpace mode_space);

// Full d^2 x d^2 operator; intended for small truncations.
LinearOperator fock_chsh_operator(const ChshConfig& config, TruncatedFockSpace mode_space);

// Largest eigenvalue of the Fock-space operator, from its compression onto
// span{beta1, beta2, one orthogonal direction} per lab. Off that subspace the
// spectrum lies in [-2, 2].
double fock_lambda_max(const ChshConfig& config, TruncatedFockSpace mode_space);

}  // namespace mzbell

#endif  // MZBELL_CHSH_HPP_
