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

#ifndef MZBELL_CHANNEL_HPP_
#define MZBELL_CHANNEL_HPP_

#include <cstddef>
#include <vector>

#include "mzbell/error.hpp"
#include "mzbell/fock.hpp"
#include "mzbell/optics.hpp"

namespace mzbell {

// Effective two-port of the interferometer feeding a photon counter on mode 5.
// The signal enters one port, a coherent field alpha the other; mode 4 is
// discarded. R = R' throughout.
struct ChannelConfig {
  Complex T;
  Complex R_prime;
  Complex T_prime;
  Complex alpha;
  TruncatedFockSpace space{1};  // per-mode truncation
  std::size_t i_max = 0;        // largest photon count with an effect operator
  bool unitary_consistent = false;  // |R'|^2 + |T|^2 = 1 to 1e-12

  Complex R() const { return R_prime; }
  Complex t_alpha() const { return T * alpha; }

  // T' follows from the Stokes relation with R = R'.
  static ChannelConfig make(Complex T, Complex R_prime, Complex alpha, TruncatedFockSpace space);
  static ChannelConfig from_mzi(const MziSettings& s, Complex alpha, TruncatedFockSpace space);
  // Real positive |R'| and |T| with alpha = alpha_scale / |T|. In strict mode
  // |R'| is replaced by sqrt(1 - |T|^2).
  static ChannelConfig from_moduli(double r_prime, double t, double alpha_scale,
                                   TruncatedFockSpace space, bool strict_unitarity);
};

// ceil(|T alpha|^2 + 6 |T alpha| + 10).
std::size_t default_i_max(Complex t_alpha);

// D4(R alpha) (x) D5(T alpha) sum_n c_n sum_k sqrt(C(n,k)) T'^k R'^(n-k) |k>|n-k>,
// mode 4 first. Requires |alpha|^2 + 4|alpha| <= dim.
Checked<StateVector> two_mode_output_state(const StateVector& psi, const ChannelConfig& config);

// Mode-5 reduction of the output state. Only the detector displacement enters,
// so the requirement is |T alpha|^2 + 4|T alpha| <= dim.
Checked<DensityOperator> reduced_detector_state(const StateVector& psi,
                                                const ChannelConfig& config);

// E_k = <k|_4 U |.>_in, k = 0..dim-1, acting from the input mode to mode 5.
Checked<std::vector<LinearOperator>> kraus_set(const ChannelConfig& config);

DensityOperator apply_kraus(const std::vector<LinearOperator>& kraus, const DensityOperator& rho);

// max |(sum_k E_k^dag E_k - I)(m, n)| over m, n <= interior.
double kraus_completeness_deficit(const std::vector<LinearOperator>& kraus, std::size_t interior);

// Closed-form effect for detecting i photons on mode 5.
LinearOperator povm_element(std::size_t i, const ChannelConfig& config);

struct PovmSet {
  ChannelConfig config;
  std::vector<std::size_t> counts;     // photon count of each effect
  std::vector<LinearOperator> effects;

  // max |(sum_i M_i - I)(m, n)| over m, n <= interior.
  double completeness_deficit(std::size_t interior) const;
};

// Effects for i = 0..config.i_max.
PovmSet build_povm(const ChannelConfig& config);
PovmSet build_povm(const ChannelConfig& config, const std::vector<std::size_t>& counts);

// G(i, j) = |Tr(M_j^dag M_i)|.
RMatrix gram_matrix(const PovmSet& povm);

// log10 of each entry; zeros and values below floor map to floor.
RMatrix log10_floor(const RMatrix& g, double floor = -30.0);

// max_{i != j} G_ij / sqrt(G_ii G_jj).
double gram_offdiagonal_ratio(const RMatrix& g);

// |i, -T alpha R'^* / |R'|><i, -T alpha R'^* / |R'||, the limit of M_i as |R'| -> 1.
LinearOperator limit_projector(std::size_t i, const ChannelConfig& config);

double hs_distance(const LinearOperator& a, const LinearOperator& b);

// Von Neumann entropy (bits) of either reduction of the output state.
Checked<double> output_entanglement_entropy(const StateVector& psi, const ChannelConfig& config);

}  // namespace mzbell

#endif  // MZBELL_CHANNEL_HPP_
