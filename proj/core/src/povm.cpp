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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mzbell/channel.hpp"
#include "wide_float.hpp"

namespace mzbell {
namespace {

using detail::quad;

// sign * exp(log_mag); sign == 0 encodes an exact zero.
struct SignedLog {
  long double log_mag = 0.0L;
  int sign = 0;
};

// k * log(v) with the convention 0 * log(0) = 0.
long double power_log(long k, long double log_v) {
  return k == 0 ? 0.0L : static_cast<long double>(k) * log_v;
}

// S_i(m) = sum_j i! m! / (j! (i-j)! (m-j)!) (-1)^j r^(i+m-2j), for m = 0..levels-1,
// accumulated in quad with the largest term factored out.
std::vector<SignedLog> s_hat_row(std::size_t i, std::size_t levels, double r,
                                 const std::vector<quad>& lfq) {
  std::vector<SignedLog> out(levels);
  const quad log_r = r > 0.0 ? logq(static_cast<quad>(r)) : 0;
  const auto ii = static_cast<long>(i);
  std::vector<quad> logs;
  for (std::size_t mu = 0; mu < levels; ++mu) {
    const auto m = static_cast<long>(mu);
    logs.clear();
    std::vector<int> signs;
    quad top = -HUGE_VALQ;
    for (long j = 0; j <= std::min(ii, m); ++j) {
      const long p = ii + m - 2 * j;
      if (r == 0.0 && p > 0) continue;
      quad l = lfq[i] + lfq[mu] - lfq[j] - lfq[ii - j] - lfq[m - j] + (p == 0 ? 0 : p * log_r);
      logs.push_back(l);
      signs.push_back((j & 1) ? -1 : 1);
      top = fmaxq(top, l);
    }
    if (logs.empty()) continue;
    quad s = 0;
    for (std::size_t t = 0; t < logs.size(); ++t) s += signs[t] * expq(logs[t] - top);
    if (s == 0) continue;
    out[mu].sign = s > 0 ? 1 : -1;
    out[mu].log_mag = static_cast<long double>(logq(fabsq(s)) + top);
  }
  return out;
}

}  // namespace

LinearOperator povm_element(std::size_t i, const ChannelConfig& c) {
  if (i > c.i_max) {
    std::ostringstream os;
    os << "povm_element: photon count " << i << " exceeds configured i_max " << c.i_max;
    throw DomainError(os.str());
  }
  const std::size_t d = c.space.dim();
  const Complex ta = c.t_alpha();
  const double r = std::abs(ta);
  const long double x = static_cast<long double>(r) * r;
  const double rho = std::abs(c.R_prime);
  const double tau = std::abs(c.T_prime);
  const long double log_rho = rho > 0.0 ? std::log(static_cast<long double>(rho)) : 0.0L;
  const long double log_tau = tau > 0.0 ? std::log(static_cast<long double>(tau)) : 0.0L;
  const Complex z = -ta * std::conj(c.R_prime);
  const double psi = z == Complex(0.0) ? 0.0 : std::arg(z);

  const std::size_t levels = std::max(d, i + 1);
  const auto lf = detail::log_factorials_ld(levels);
  const auto lfq = detail::log_factorials_q(levels);
  const auto s = s_hat_row(i, d, r, lfq);
  const long double pre = -x - lf[i];

  const auto n = static_cast<long>(d);
  CMatrix m = CMatrix::Zero(n, n);
  for (long a = 0; a < n; ++a) {
    for (long b = a; b < n; ++b) {
      long double sum = 0.0L;
      for (long l = 0; l <= a; ++l) {
        const SignedLog& sa = s[static_cast<std::size_t>(a - l)];
        const SignedLog& sb = s[static_cast<std::size_t>(b - l)];
        if (sa.sign == 0 || sb.sign == 0) continue;
        if (rho == 0.0 && a + b - 2 * l > 0) continue;
        if (tau == 0.0 && l > 0) continue;
        long double lg = pre + power_log(a + b - 2 * l, log_rho) + power_log(2 * l, log_tau) -
                         lf[l] + 0.5L * (lf[a] + lf[b]) - lf[a - l] - lf[b - l] + sa.log_mag +
                         sb.log_mag;
        long double t = std::exp(lg);
        sum += sa.sign * sb.sign > 0 ? t : -t;
      }
      const Complex v = static_cast<double>(sum) * std::polar(1.0, psi * static_cast<double>(a - b));
      m(a, b) = v;
      m(b, a) = std::conj(v);
    }
  }
  return LinearOperator(c.space, std::move(m));
}

double PovmSet::completeness_deficit(std::size_t interior) const {
  const auto d = static_cast<Eigen::Index>(config.space.dim());
  CMatrix s = -CMatrix::Identity(d, d);
  for (const auto& e : effects) s += e.matrix();
  const auto b = std::min<Eigen::Index>(static_cast<Eigen::Index>(interior) + 1, d);
  return s.topLeftCorner(b, b).cwiseAbs().maxCoeff();
}

PovmSet build_povm(const ChannelConfig& config) {
  std::vector<std::size_t> counts(config.i_max + 1);
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] = i;
  return build_povm(config, counts);
}

PovmSet build_povm(const ChannelConfig& config, const std::vector<std::size_t>& counts) {
  PovmSet set{config, counts, {}};
  set.effects.reserve(counts.size());
  for (std::size_t i : counts) set.effects.push_back(povm_element(i, config));
  return set;
}

}  // namespace mzbell
