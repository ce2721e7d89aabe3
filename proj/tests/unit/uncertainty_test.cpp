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

#include "mzbell/uncertainty.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "frozen.hpp"
#include "helpers.hpp"
#include "mzbell/optics.hpp"

namespace mzbell {
namespace {

using testing::seeded;

std::size_t window_for(double x) { return static_cast<std::size_t>(std::max(60.0, std::ceil(3.0 * x) + 20.0)); }

TEST(OverlapBound, FrozenConstants) {
  for (const auto& e : frozen::kOverlap) {
    const std::size_t w = window_for(e.x);
    const OverlapBound b = overlap_bound_c(0.0, std::sqrt(e.x), w, w);
    EXPECT_NEAR(b.c, e.c, 1e-13) << "x=" << e.x;
    EXPECT_NEAR(-2.0 * std::log2(b.c), e.minus_2log2_c, 1e-12);
    EXPECT_TRUE(b.n == 0 || b.k == 0) << "argmax off the edge at x=" << e.x;
  }
}

TEST(OverlapBound, DependsOnlyOnDifference) {
  auto rng = seeded(31);
  for (int trial = 0; trial < 5; ++trial) {
    const Complex a = testing::random_amplitude(2.0, rng), b = testing::random_amplitude(2.0, rng);
    const Complex shift = testing::random_amplitude(3.0, rng);
    const std::size_t w = window_for(std::norm(a - b));
    EXPECT_NEAR(overlap_bound_c(a, b, w, w).c, overlap_bound_c(a + shift, b + shift, w, w).c, 1e-14);
    EXPECT_NEAR(overlap_bound_c(a, b, w, w).c, overlap_bound_c(b, a, w, w).c, 1e-14);
  }
}

TEST(OverlapBound, RejectsShortWindow) {
  EXPECT_THROW(overlap_bound_c(0.0, 3.0, 20, 60), DomainError);
  EXPECT_NO_THROW(overlap_bound_c(0.0, 3.0, 27, 27));
}

TEST(Bounds, EdgeFormulaMatchesCoherentAmplitude) {
  for (int x = 1; x <= 20; ++x) {
    const StateVector c = coherent_state(std::sqrt(static_cast<double>(x)), TruncatedFockSpace(90));
    EXPECT_NEAR(cnk_max_formula(x), std::abs(c[static_cast<std::size_t>(x)]), 1e-14);
  }
  EXPECT_EQ(cnk_max_formula(0.0), 1.0);
  EXPECT_THROW(cnk_max_formula(-1.0), DomainError);
}

TEST(Bounds, StirlingFormCollapsesToPowerLaw) {
  for (double x : {0.3, 1.0, 2.5, 14.44, 100.0})
    EXPECT_NEAR(stirling_bound(x) / simplified_bound(x), 1.0, 1e-13) << x;
  EXPECT_THROW(stirling_bound(0.0), DomainError);
  EXPECT_THROW(simplified_bound(-1.0), DomainError);
}

TEST(Bounds, PowerLawVersusExactConstant) {
  // Holds at integer separations; the non-integer point 14.44 breaks it.
  for (const auto& e : frozen::kOverlap) {
    if (e.x == std::floor(e.x))
      EXPECT_LT(e.c, simplified_bound(e.x)) << e.x;
    else
      EXPECT_GT(e.c, simplified_bound(e.x)) << e.x;
  }
}

TEST(MuBound, ClosedForm) {
  EXPECT_EQ(mu_bound(1.0, 1.0), 0.0);
  EXPECT_NEAR(mu_bound(0.0, std::sqrt(std::numbers::ln2)), 1.0613648782637105919, 1e-15);
  EXPECT_NEAR(mu_bound(Complex(0.5, 0.5), Complex(0.5, -0.5)), 0.5 * std::log2(2.0 * std::numbers::pi), 1e-15);
  EXPECT_EQ(mu_bound(0.0, 0.1), 0.0);  // clipped below 1 / (2 pi)
}

TEST(Shannon, KnownDistributions) {
  EXPECT_DOUBLE_EQ(shannon_entropy(std::vector<double>{0.25, 0.25, 0.25, 0.25}), 2.0);
  EXPECT_DOUBLE_EQ(shannon_entropy(std::vector<double>{1.0, 0.0, 0.0}), 0.0);
  EXPECT_NEAR(shannon_entropy(std::vector<double>{0.5, 0.25, 0.125, 0.125}), 1.75, 1e-15);
}

TEST(MeasurementDistribution, DisplacedNumberStateIsSharp) {
  const Complex beta(0.8, -0.3);
  const StateVector psi = gcs_state(3, -beta, TruncatedFockSpace(40)).normalized();
  auto d = measurement_distribution(psi, beta, TruncatedFockSpace(80));
  EXPECT_TRUE(d.ok());
  EXPECT_NEAR(d.value.probabilities[3], 1.0, 1e-12);
  EXPECT_NEAR(shannon_entropy(d.value), 0.0, 1e-10);
  EXPECT_LT(std::abs(d.value.tail), 1e-12);
}

TEST(MeasurementDistribution, RejectsUnnormalizedAndWarnsOnTail) {
  CVector v = CVector::Zero(10);
  v(0) = 2.0;
  EXPECT_THROW(measurement_distribution(StateVector(TruncatedFockSpace(10), v), 0.5, TruncatedFockSpace(20)),
               DomainError);
  auto d = measurement_distribution(StateVector::basis(TruncatedFockSpace(12), 11), 2.0, TruncatedFockSpace(12));
  EXPECT_FALSE(d.ok());
  EXPECT_GT(d.value.tail, 1e-4);
}

TEST(MuVerifier, RandomStatesRespectBound) {
  auto rng = seeded(32);
  const TruncatedFockSpace s(24);
  for (double x : {0.5, std::numbers::ln2, 2.0, 4.0}) {
    const Complex half = 0.5 * std::sqrt(x);
    MuVerifier v(-half, half, 24);
    EXPECT_GT(v.work_dim(), 24u);
    for (int t = 0; t < 25; ++t) {
      const MuCheck m = v.verify(haar_random_state(s, rng));
      EXPECT_GE(m.slack, -1e-9);
      EXPECT_LT(m.tail, 1e-6);
      EXPECT_NEAR(m.slack, m.h_p + m.h_q - m.bound, 1e-15);
    }
  }
}

TEST(MuVerifier, RefusesTruncatedDistributions) {
  const StateVector top = StateVector::basis(TruncatedFockSpace(24), 23);
  EXPECT_THROW(verify_mu(top, 0.0, 2.0, 24), TruncationError);
  EXPECT_NO_THROW(verify_mu(top, 0.0, 2.0));
}

TEST(ConjectureScan, SmallGridStaysOnEdge) {
  const auto recs = conjecture_scan({0.5, 1.0, 2.0, 3.0}, 4, 40);
  ASSERT_EQ(recs.size(), 16u);
  for (const auto& r : recs) {
    EXPECT_TRUE(r.on_edge) << "|b|=" << r.abs_beta << " phase=" << r.phase;
    const OverlapBound b = overlap_bound_c(0.0, std::polar(r.abs_beta, r.phase), 39, 39);
    EXPECT_NEAR(r.c, b.c, 1e-14);
  }
  EXPECT_THROW(conjecture_scan({1.0}, 0, 10), DomainError);
}

TEST(HaarRandomState, NormalizedAndSeedDeterministic) {
  std::mt19937_64 a(5), b(5);
  const StateVector u = haar_random_state(TruncatedFockSpace(16), a);
  const StateVector v = haar_random_state(TruncatedFockSpace(16), b);
  EXPECT_NEAR(u.norm(), 1.0, 1e-15);
  EXPECT_EQ(u.amplitudes(), v.amplitudes());

  std::mt19937_64 rng(6);
  RVector mean = RVector::Zero(8);
  const int samples = 4000;
  for (int t = 0; t < samples; ++t)
    mean += haar_random_state(TruncatedFockSpace(8), rng).amplitudes().cwiseAbs2() / samples;
  EXPECT_LT((mean.array() - 0.125).abs().maxCoeff(), 0.01);
}

}  // namespace
}  // namespace mzbell
