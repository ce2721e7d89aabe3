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

#ifndef MZBELL_UNCERTAINTY_HPP_
#define MZBELL_UNCERTAINTY_HPP_

#include <cstddef>
#include <random>
#include <vector>

#include "mzbell/error.hpp"
#include "mzbell/fock.hpp"
#include "mzbell/optics.hpp"

namespace mzbell {

// p_i = |<i|D(beta)|psi>|^2 over a work truncation.
struct MeasurementDistribution {
  std::vector<double> probabilities;  // clamped at 0
  double tail = 0.0;                  // 1 - sum p
  Complex beta;
};

// psi must be normalized to 1e-10 and fit inside work_space.
Checked<MeasurementDistribution> measurement_distribution(const StateVector& psi, Complex beta,
                                                          TruncatedFockSpace work_space);
// Same, with a prebuilt D(beta) on the work space.
Checked<MeasurementDistribution> measurement_distribution(const StateVector& psi, Complex beta,
                                                          const LinearOperator& displacement);

// Bits; 0 log 0 = 0.
double shannon_entropy(const MeasurementDistribution& d);
double shannon_entropy(const std::vector<double>& p);

struct OverlapBound {
  double c = 0.0;
  long n = 0;  // argmax of |C_{n,k}(beta1 - beta2)|
  long k = 0;
};

// Scans n <= n_max, k <= k_max. Requires min(n_max, k_max) >= 3|beta1 - beta2|^2.
OverlapBound overlap_bound_c(Complex beta1, Complex beta2, std::size_t n_max, std::size_t k_max);

// e^{-x/2} x^{x/2} / sqrt(Gamma(x + 1)): |C_{0,k}| continued to real k = x = |beta|^2.
double cnk_max_formula(double x);
// The same expression with Gamma(x + 1) replaced by the Stirling lower bound.
double stirling_bound(double x);
// (2 pi x)^{-1/4}.
double simplified_bound(double x);

// max(0, 1/2 log2(2 pi |beta1 - beta2|^2)).
double mu_bound(Complex beta1, Complex beta2);

struct MuCheck {
  double h_p = 0.0;
  double h_q = 0.0;
  double bound = 0.0;
  double slack = 0.0;  // h_p + h_q - bound
  double tail = 0.0;   // larger of the two truncation tails
};

// Caches both displacement matrices for repeated checks at fixed settings.
class MuVerifier {
 public:
  // work_dim = 0 picks state_dim + ceil(b^2 + 8 b sqrt(state_dim) + 16), b = max |beta_i|.
  MuVerifier(Complex beta1, Complex beta2, std::size_t state_dim, std::size_t work_dim = 0);

  // Throws TruncationError when either tail reaches 1e-6.
  MuCheck verify(const StateVector& psi) const;

  std::size_t work_dim() const { return d1_.dim(); }

 private:
  Complex beta1_;
  Complex beta2_;
  LinearOperator d1_;
  LinearOperator d2_;
};

MuCheck verify_mu(const StateVector& psi, Complex beta1, Complex beta2, std::size_t work_dim = 0);

struct ConjectureRecord {
  double abs_beta = 0.0;
  double phase = 0.0;
  double c = 0.0;
  long n = 0;
  long k = 0;
  double edge_max = 0.0;      // max over the n = 0 and k = 0 edges
  double interior_max = 0.0;  // max over n, k >= 1
  bool on_edge = false;
};

// Global maximum of |C_{n,k}(beta)| over a window x window block for each
// |beta| in abs_grid and `phases` equally spaced phases in [0, 2 pi).
std::vector<ConjectureRecord> conjecture_scan(const std::vector<double>& abs_grid,
                                              std::size_t phases, std::size_t window);

// Unitarily invariant random pure state.
StateVector haar_random_state(TruncatedFockSpace space, std::mt19937_64& rng);

}  // namespace mzbell

#endif  // MZBELL_UNCERTAINTY_HPP_
