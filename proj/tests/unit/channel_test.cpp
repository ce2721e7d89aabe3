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

#include "mzbell/channel.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "frozen.hpp"
#include "helpers.hpp"
#include "mzbell/optics.hpp"

namespace mzbell {
namespace {

using testing::random_state;
using testing::seeded;

double expectation(const LinearOperator& m, const StateVector& psi) {
  const auto d = static_cast<Eigen::Index>(m.dim());
  CVector v = CVector::Zero(d);
  v.head(psi.amplitudes().size()) = psi.amplitudes();
  return (v.adjoint() * m.matrix() * v)(0).real();
}

double binary_entropy(double p) { return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p); }

ChannelConfig acceptance_config(std::size_t dim) {
  // |alpha| = 2 and T alpha = 0.1 under strict unitarity.
  return ChannelConfig::from_moduli(0.0, 0.05, 0.1, TruncatedFockSpace(dim), true);
}

TEST(ChannelConfig, DerivedTransmissionSatisfiesStokes) {
  auto rng = seeded(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex T = testing::random_amplitude(1.0, rng);
    const Complex Rp = std::polar(std::sqrt(1.0 - std::norm(T)), std::arg(testing::random_amplitude(1.0, rng)));
    ChannelConfig c = ChannelConfig::make(T, Rp, 1.0, TruncatedFockSpace(8));
    EXPECT_LT(std::abs(c.T_prime * std::conj(Rp) + Rp * std::conj(T)), 1e-15);
    EXPECT_NEAR(std::abs(c.T_prime), std::abs(T), 1e-15);
    EXPECT_TRUE(c.unitary_consistent);
  }
}

TEST(ChannelConfig, FromModuli) {
  ChannelConfig fig = ChannelConfig::from_moduli(0.999987, 5e-7, 0.1, TruncatedFockSpace(50), false);
  EXPECT_FALSE(fig.unitary_consistent);
  EXPECT_DOUBLE_EQ(std::abs(fig.R_prime), 0.999987);
  EXPECT_NEAR(std::abs(fig.t_alpha()), 0.1, 1e-15);

  ChannelConfig strict = ChannelConfig::from_moduli(0.999987, 5e-7, 0.1, TruncatedFockSpace(50), true);
  EXPECT_TRUE(strict.unitary_consistent);
  EXPECT_NEAR(std::abs(strict.R_prime), std::sqrt(1.0 - 25e-14), 1e-16);

  EXPECT_THROW(ChannelConfig::from_moduli(0.5, 0.0, 0.1, TruncatedFockSpace(4), false), DomainError);
  EXPECT_THROW(ChannelConfig::from_moduli(0.5, 1.0, 0.1, TruncatedFockSpace(4), true), DomainError);
  EXPECT_THROW(ChannelConfig::from_moduli(-0.5, 0.3, 0.1, TruncatedFockSpace(4), false), DomainError);
}

TEST(ChannelConfig, FromMziKeepsInterferometerTransmission) {
  const MziSettings s{0.7, -0.4};
  ChannelConfig c = ChannelConfig::from_mzi(s, 3.0, TruncatedFockSpace(8));
  const MziTwoPort m = mzi_two_port(s);
  EXPECT_EQ(c.T_prime, m.T_prime);
  EXPECT_EQ(c.R_prime, m.R);
  EXPECT_TRUE(c.unitary_consistent);
}

TEST(ChannelConfig, DefaultIMax) {
  EXPECT_EQ(default_i_max(0.0), 10u);
  EXPECT_EQ(default_i_max(0.1), 11u);
  EXPECT_EQ(default_i_max(2.0), 26u);
}

TEST(Povm, FrozenDetectorStatistics) {
  ChannelConfig c = acceptance_config(20);
  c.i_max = std::max<std::size_t>(c.i_max, 12);
  const TruncatedFockSpace s(20);
  CVector one = CVector::Zero(20), cat = CVector::Zero(20), mix = CVector::Zero(20);
  one(1) = 1.0;
  cat(0) = cat(3) = 1.0 / std::numbers::sqrt2;
  mix(2) = 1.0 / std::sqrt(3.0);
  mix(5) = Complex(0.0, 1.0 / std::sqrt(3.0));
  mix(9) = -1.0 / std::sqrt(3.0);
  const std::pair<CVector, const std::array<double, 13>*> cases[] = {
      {one, &frozen::kPovmOne}, {cat, &frozen::kPovmCat}, {mix, &frozen::kPovmMix}};
  for (std::size_t i = 0; i <= 12; ++i) {
    const LinearOperator m = povm_element(i, c);
    for (const auto& [v, ref] : cases) EXPECT_NEAR(expectation(m, StateVector(s, v)), (*ref)[i], 1e-12) << i;
  }
}

TEST(Povm, AgreesWithReducedDetectorState) {
  auto rng = seeded(22);
  for (int trial = 0; trial < 4; ++trial) {
    const double rp = std::uniform_real_distribution<double>(0.5, 0.999)(rng);
    const double t = std::sqrt(1.0 - rp * rp);
    const Complex alpha = std::polar(0.3 / t, std::uniform_real_distribution<double>(0.0, 6.28)(rng));
    ChannelConfig c = ChannelConfig::make(t, rp, alpha, TruncatedFockSpace(24));
    const StateVector psi = random_state(8, rng);
    const CMatrix rho = reduced_detector_state(psi, c).value.matrix();
    for (std::size_t i = 0; i <= 10; ++i)
      EXPECT_NEAR(expectation(povm_element(i, c), psi), rho(i, i).real(), 1e-10);
  }
}

TEST(Povm, EffectsArePositive) {
  auto rng = seeded(23);
  for (int trial = 0; trial < 4; ++trial) {
    const double t = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
    ChannelConfig c = ChannelConfig::from_moduli(0.0, t, 0.2, TruncatedFockSpace(30), true);
    for (std::size_t i = 0; i <= c.i_max; i += 3) {
      const LinearOperator m = povm_element(i, c);
      EXPECT_LT(hermiticity_deviation(m.matrix()), 1e-15);
      EXPECT_GT(hermitian_eigensystem(m).values.minCoeff(), -1e-12) << "i=" << i;
    }
  }
}

TEST(Povm, TrivialDisplacementGivesBinomialSplitting) {
  ChannelConfig c = ChannelConfig::from_moduli(0.8, 0.6, 0.0, TruncatedFockSpace(10), false);
  for (std::size_t i = 0; i <= 4; ++i) {
    const CMatrix m = povm_element(i, c).matrix();
    for (Eigen::Index n = 0; n < 10; ++n) {
      const double want = n >= static_cast<Eigen::Index>(i)
                              ? std::exp(std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0)) *
                                    std::pow(0.64, static_cast<double>(i)) * std::pow(0.36, static_cast<double>(n - i))
                              : 0.0;
      EXPECT_NEAR(m(n, n).real(), want, 1e-14);
    }
    EXPECT_LT((m - CMatrix(m.diagonal().asDiagonal())).norm(), 1e-15);
  }
  EXPECT_NEAR(povm_element(0, c).matrix()(0, 0).real(), 1.0, 1e-15);
}

TEST(Povm, LowBlockCompleteness) {
  PovmSet set = build_povm(acceptance_config(30));
  EXPECT_EQ(set.counts.size(), set.config.i_max + 1);
  EXPECT_LT(set.completeness_deficit(2), 1e-8);
}

TEST(Povm, RejectsCountBeyondIMax) {
  ChannelConfig c = acceptance_config(20);
  EXPECT_THROW(povm_element(c.i_max + 1, c), DomainError);
}

TEST(Gram, SymmetricWithFloor) {
  ChannelConfig c = ChannelConfig::from_moduli(0.866, 0.5, 0.1, TruncatedFockSpace(20), false);
  c.i_max = 1;
  const RMatrix g = gram_matrix(build_povm(c));
  ASSERT_EQ(g.rows(), 2);
  EXPECT_EQ(g(0, 1), g(1, 0));
  RMatrix z = RMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  const RMatrix lz = log10_floor(z, -30.0);
  EXPECT_EQ(lz(0, 0), 0.0);
  EXPECT_EQ(lz(0, 1), -30.0);
  EXPECT_EQ(log10_floor(z, -5.0)(1, 1), -5.0);
  EXPECT_EQ(gram_offdiagonal_ratio(RMatrix::Identity(3, 3)), 0.0);
}

TEST(Gram, DiagonalInProjectiveLimit) {
  ChannelConfig d = ChannelConfig::from_moduli(0.999987, 5e-7, 0.1, TruncatedFockSpace(52), false);
  d.i_max = 40;
  EXPECT_LT(gram_offdiagonal_ratio(gram_matrix(build_povm(d))), 1e-2);
  ChannelConfig a = ChannelConfig::from_moduli(0.866, 0.5, 0.1, TruncatedFockSpace(52), false);
  a.i_max = 40;
  EXPECT_GT(gram_offdiagonal_ratio(gram_matrix(build_povm(a))), 0.5);
}

TEST(LimitProjector, DistanceShrinksAlongSequence) {
  const double rp[] = {0.866, 0.954, 0.987, 0.999987};
  const double tt[] = {0.5, 5e-3, 5e-5, 5e-7};
  double prev = INFINITY;
  for (int f = 0; f < 4; ++f) {
    ChannelConfig c = ChannelConfig::from_moduli(rp[f], tt[f], 0.1, TruncatedFockSpace(50), false);
    const double h = hs_distance(povm_element(0, c), limit_projector(0, c));
    EXPECT_LT(h, prev);
    prev = h;
  }
  EXPECT_LT(prev, 1e-5);
}

TEST(Kraus, MatchesPartialTraceAndIsComplete) {
  auto rng = seeded(24);
  ChannelConfig c = acceptance_config(40);
  auto k = kraus_set(c);
  for (int trial = 0; trial < 3; ++trial) {
    const StateVector psi = random_state(6, rng);
    const CMatrix a = apply_kraus(k.value, DensityOperator::from_pure(psi)).matrix();
    EXPECT_LT((a - reduced_detector_state(psi, c).value.matrix()).norm(), 1e-10);
  }
  ChannelConfig wide = acceptance_config(128);
  const std::size_t interior = interior_limit(128, std::abs(wide.R() * wide.alpha));
  EXPECT_LT(kraus_completeness_deficit(kraus_set(wide).value, interior), 1e-8);
}

TEST(OutputState, NormPreservedAndEntropyIsBinary) {
  auto rng = seeded(25);
  ChannelConfig c = acceptance_config(40);
  const StateVector psi = random_state(5, rng);
  EXPECT_NEAR(two_mode_output_state(psi, c).value.norm(), 1.0, 1e-10);
  for (double a : {0.25, 1.0, 4.0}) {
    ChannelConfig ca = ChannelConfig::from_moduli(0.0, 0.1 / a, 0.1, TruncatedFockSpace(64), true);
    const double h = output_entanglement_entropy(StateVector::basis(TruncatedFockSpace(2), 1), ca).value;
    EXPECT_NEAR(h, binary_entropy(std::norm(ca.R_prime)), 1e-9);
  }
}

TEST(OutputState, RequiresRoomForDisplacement) {
  ChannelConfig c = ChannelConfig::from_moduli(0.0, 0.01, 0.1, TruncatedFockSpace(40), true);  // |alpha| = 10
  EXPECT_THROW(two_mode_output_state(StateVector::basis(TruncatedFockSpace(2), 1), c), TruncationError);
  auto rng = seeded(26);
  EXPECT_THROW(two_mode_output_state(random_state(41, rng), acceptance_config(40)), DimensionError);
}

}  // namespace
}  // namespace mzbell
