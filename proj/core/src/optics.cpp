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

#include "mzbell/optics.hpp"

#include <cmath>
#include <sstream>

namespace mzbell {
namespace {

constexpr double kStokesTol = 1e-9;

}  // namespace

std::vector<std::string> stokes_violations(const BeamSplitterParams& p, double tol) {
  std::vector<std::string> out;
  auto report = [&](const char* law, double residual) {
    if (!(residual <= tol)) {
      std::ostringstream os;
      os << law << " (residual " << residual << ")";
      out.push_back(os.str());
    }
  };
  report("|t|^2 + |r|^2 = 1", std::abs(std::norm(p.t) + std::norm(p.r) - 1.0));
  report("|t'|^2 + |r'|^2 = 1", std::abs(std::norm(p.t_prime) + std::norm(p.r_prime) - 1.0));
  report("t' r^* + r' t^* = 0",
         std::abs(p.t_prime * std::conj(p.r) + p.r_prime * std::conj(p.t)));
  return out;
}

Eigen::Matrix2cd beam_splitter_matrix(const BeamSplitterParams& p) {
  auto bad = stokes_violations(p, kStokesTol);
  if (!bad.empty()) {
    std::ostringstream os;
    os << "beam_splitter_matrix: Stokes law violated:";
    for (const auto& b : bad) os << " [" << b << "]";
    throw DomainError(os.str());
  }
  Eigen::Matrix2cd m;
  m << p.t_prime, p.r, p.r_prime, p.t;
  return m;
}

MziTwoPort mzi_two_port(const MziSettings& s) {
  const Complex e_phi = std::polar(1.0, s.phi);
  const Complex e_gamma = std::polar(1.0, s.gamma);
  MziTwoPort out;
  out.R = 0.5 * (1.0 + e_phi);
  out.T = 0.5 * e_gamma * (1.0 - e_phi);
  out.T_prime = 0.5 * std::conj(e_gamma) * (1.0 - e_phi);
  out.matrix << out.R, out.T, out.T_prime, out.R;
  return out;
}

}  // namespace mzbell
