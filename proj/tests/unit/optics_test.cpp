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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <unsupported/Eigen/MatrixFunctions>

#include "frozen.hpp"
#include "helpers.hpp"

namespace mzbell {
namespace {

using testing::max_abs;
using testing::seeded;

constexpr DisplacementMethod kMethods[] = {DisplacementMethod::direct, DisplacementMethod::factorized,
                                           DisplacementMethod::laguerre};

// exp(beta a^dag - beta^* a) on a generous truncation.
CMatrix expm_displacement(Complex beta, Eigen::Index dim) {
  CMatrix g = CMatrix::Zero(dim, dim);
  for (Eigen::Index n = 1; n < dim; ++n) {
    const double s = std::sqrt(static_cast<double>(n));
    g(n, n - 1) = beta * s;
    g(n - 1, n) = -std::conj(beta) * s;
  }
  return g.exp();
}

TEST(BeamSplitter, SymmetricSplitterIsUnitary) {
  const double s = 1.0 / std::numbers::sqrt2;
  BeamSplitterParams p{Complex(0, s), s, Complex(0, s), s};
  EXPECT_TRUE(stokes_violations(p).empty());
  Eigen::Matrix2cd m = beam_splitter_matrix(p);
  EXPECT_LT((m.adjoint() * m - Eigen::Matrix2cd::Identity()).norm(), 1e-15);
}

TEST(BeamSplitter, ReportsEachViolatedLaw) {
  BeamSplitterParams p{0.999987, 5e-7, 0.999987, 5e-7};
  const auto v = stokes_violations(p);
  EXPECT_EQ(v.size(), 3u);  // both moduli laws and the phase law
  EXPECT_THROW(beam_splitter_matrix(p), DomainError);

  BeamSplitterParams phase{0.6, 0.8, 0.6, 0.8};  // moduli fine, phases not
  const auto w = stokes_violations(phase);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NE(w.front().find("t' r^*"), std::string::npos);
}

TEST(Mzi, UnitaryAndEnergyConserving) {
  auto rng = seeded(11);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  for (int trial = 0; trial < 50; ++trial) {
    MziTwoPort m = mzi_two_port({ang(rng), ang(rng)});
    EXPECT_LT((m.matrix.adjoint() * m.matrix - Eigen::Matrix2cd::Identity()).norm(), 1e-15);
    EXPECT_NEAR(std::norm(m.R) + std::norm(m.T), 1.0, 1e-15);
    EXPECT_NEAR(std::norm(m.R) + std::norm(m.T_prime), 1.0, 1e-15);
  }
  MziTwoPort closed = mzi_two_port({0.0, 0.3});
  EXPECT_NEAR(std::abs(closed.R), 1.0, 1e-16);
  EXPECT_NEAR(std::abs(closed.T), 0.0, 1e-16);
}

TEST(Displacement, FrozenCoefficients) {
  for (const auto& e : frozen::kDisplacement) {
    const Complex beta(e.beta_re, e.beta_im);
    const Complex ref(e.re, e.im);
    EXPECT_LT(std::abs(displacement_coefficient(e.n, e.k, beta) - ref), 2e-14)
        << "n=" << e.n << " k=" << e.k;
  }
  EXPECT_THROW(displacement_coefficient(-1, 0, 1.0), DomainError);
}

TEST(Displacement, FrozenMatrixEntriesEveryMethod) {
  for (DisplacementMethod m : kMethods) {
    for (const auto& e : frozen::kDisplacement) {
      const Complex beta(e.beta_re, e.beta_im);
      const std::size_t dim = std::abs(beta) > 3.0 ? 360 : 96;
      const auto d = displacement_matrix(beta, TruncatedFockSpace(dim), m).value.matrix();
      EXPECT_LT(std::abs(d(e.k, e.n) - Complex(e.re, e.im)), 2e-14)
          << to_string(m) << " n=" << e.n << " k=" << e.k;
    }
  }
}

TEST(Displacement, MatchesMatrixExponentialOnInterior) {
  auto rng = seeded(12);
  for (int trial = 0; trial < 6; ++trial) {
    const Complex beta = testing::random_amplitude(2.0, rng);
    const std::size_t dim = 96;
    const auto lim = static_cast<Eigen::Index>(interior_limit(dim, std::abs(beta)));
    const CMatrix ref = expm_displacement(beta, 240).topLeftCorner(lim + 1, lim + 1);
    for (DisplacementMethod m : kMethods) {
      const CMatrix d = displacement_matrix(beta, TruncatedFockSpace(dim), m).value.matrix();
      EXPECT_LT(max_abs(d.topLeftCorner(lim + 1, lim + 1) - ref), 1e-12) << to_string(m);
    }
  }
}

TEST(Displacement, MethodsAgreeOnInteriorBlock) {
  const std::pair<double, std::size_t> grid[] = {{0.3, 64}, {1.0, 64}, {2.0, 128}, {3.8, 256}};
  for (const auto& [r, dim] : grid) {
    const auto lim = static_cast<Eigen::Index>(interior_limit(dim, r));
    ASSERT_GT(lim, 0);
    for (int p = 0; p < 4; ++p) {
      const Complex beta = std::polar(r, p * std::numbers::pi / 3.0 + 0.1);
      const TruncatedFockSpace s(dim);
      const CMatrix a = displacement_matrix(beta, s, DisplacementMethod::direct).value.matrix();
      const CMatrix b = displacement_matrix(beta, s, DisplacementMethod::factorized).value.matrix();
      const CMatrix c = displacement_matrix(beta, s, DisplacementMethod::laguerre).value.matrix();
      const auto blk = [&](const CMatrix& m) { return m.topLeftCorner(lim + 1, lim + 1); };
      EXPECT_LT(max_abs(blk(a) - blk(b)), 1e-10) << "|beta|=" << r;
      EXPECT_LT(max_abs(blk(a) - blk(c)), 1e-10) << "|beta|=" << r;
    }
  }
}

TEST(Displacement, UnitaryOnInteriorAndComposes) {
  auto rng = seeded(13);
  const TruncatedFockSpace s(128);
  for (int trial = 0; trial < 5; ++trial) {
    const Complex a = testing::random_amplitude(1.2, rng), b = testing::random_amplitude(1.2, rng);
    const auto lim = static_cast<Eigen::Index>(interior_limit(128, std::abs(a) + std::abs(b)));
    const CMatrix da = displacement_matrix(a, s).value.matrix();
    const CMatrix db = displacement_matrix(b, s).value.matrix();
    const CMatrix dab = displacement_matrix(a + b, s).value.matrix();
    const CMatrix u = da.adjoint() * da;
    EXPECT_LT(max_abs(u.topLeftCorner(lim + 1, lim + 1) - CMatrix::Identity(lim + 1, lim + 1)), 1e-12);
    // D(a) D(b) = exp(i Im(a b^*)) D(a + b)
    const Complex phase = std::polar(1.0, (a * std::conj(b)).imag());
    const CMatrix lhs = da * db;
    EXPECT_LT(max_abs(lhs.topLeftCorner(lim + 1, lim + 1) - phase * dab.topLeftCorner(lim + 1, lim + 1)),
              1e-12);
  }
}

TEST(Displacement, ZeroAmplitudeIsIdentity) {
  for (DisplacementMethod m : kMethods) {
    auto d = displacement_matrix(0.0, TruncatedFockSpace(12), m);
    EXPECT_EQ(d.value.matrix(), CMatrix::Identity(12, 12));
  }
}

TEST(Displacement, WarnsWhenTruncationTooSmall) {
  auto d = displacement_matrix(3.8, TruncatedFockSpace(20));
  ASSERT_FALSE(d.ok());
  EXPECT_NE(d.warnings.front().find("dim/2"), std::string::npos);
  EXPECT_TRUE(displacement_matrix(1.0, TruncatedFockSpace(20)).ok());
  EXPECT_THROW(displacement_matrix(Complex(INFINITY, 0.0), TruncatedFockSpace(4)), DomainError);
}

TEST(CoherentState, RecurrenceAndPoissonStatistics) {
  auto rng = seeded(14);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex beta = testing::random_amplitude(4.0, rng);
    const StateVector c = coherent_state(beta, TruncatedFockSpace(80));
    const double x = std::norm(beta);
    for (std::size_t k = 1; k < 60; ++k) {
      const Complex want = beta / std::sqrt(static_cast<double>(k)) * c[k - 1];
      EXPECT_LE(std::abs(c[k] - want), 1e-12 * std::max(std::abs(want), 1e-300));
      const double poisson = std::exp(-x + k * std::log(x) - std::lgamma(k + 1.0));
      EXPECT_NEAR(std::norm(c[k]), poisson, 1e-13);
    }
  }
}

TEST(CoherentState, ArgmaxIsPoissonMode) {
  for (double x : {0.09, 0.7, 1.0, 2.3, 4.0, 7.6, 14.44, 20.5}) {
    const StateVector c = coherent_state(std::sqrt(x), TruncatedFockSpace(80));
    Eigen::Index arg = 0;
    c.amplitudes().cwiseAbs().maxCoeff(&arg);
    const double fl = std::floor(x);
    if (x == fl) {
      EXPECT_TRUE(arg == static_cast<Eigen::Index>(x) || arg == static_cast<Eigen::Index>(x) - 1) << x;
    } else {
      EXPECT_EQ(arg, static_cast<Eigen::Index>(fl)) << x;
    }
  }
}

TEST(GcsState, ColumnsOfDisplacement) {
  const Complex beta(1.1, -0.4);
  const TruncatedFockSpace s(50);
  const CMatrix d = displacement_matrix(beta, s).value.matrix();
  for (std::size_t n : {0u, 1u, 5u, 12u})
    EXPECT_LT((gcs_state(n, beta, s).amplitudes() - d.col(static_cast<Eigen::Index>(n))).norm(), 1e-14);
  EXPECT_THROW(gcs_state(50, beta, s), DomainError);
}

TEST(InteriorLimit, MarginRule) {
  EXPECT_EQ(interior_limit(256, 3.8), 256u - 244u);
  EXPECT_EQ(interior_limit(64, 0.0), 63u);
  EXPECT_EQ(interior_limit(16, 5.0), 0u);
  EXPECT_THROW(interior_limit(0, 1.0), DimensionError);
}

}  // namespace
}  // namespace mzbell
