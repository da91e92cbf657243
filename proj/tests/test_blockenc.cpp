// Copyright 2026 The EntropyBench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <numbers>

#include "entropybench/blockenc.hpp"
#include "entropybench/error.hpp"
#include "entropybench/rng.hpp"
#include "entropybench/states.hpp"
#include "entropybench/tolerances.hpp"
#include "oracles.hpp"

using namespace entropybench;

namespace {

constexpr double kPi4 = std::numbers::pi / 4.0;

BlockEncoding exact(const CMatrix& a) { return BlockEncoding(a, a, 1.0, 1, 0.0, 0.0); }

}  // namespace

TEST(EncodeDensity, PureNoiseless) {
  const DensityMatrix rho = from_spectrum({1.0}, 2);
  const BlockEncoding be = encode_density(rho, 0.1, 1, EncodingNoise::kNoiseless);
  EXPECT_NEAR(be.encoded()(0, 0).real(), kPi4, 1e-15);
  EXPECT_EQ(be.encoded()(1, 1), Complex(0, 0));
  EXPECT_NEAR(oracle::eigenvalues(be.encoded()).back(), 0.7853981634, 1e-10);
  EXPECT_EQ(be.eta(), 0.1);
  EXPECT_EQ(be.subnorm(), 1.0);
}

TEST(EncodeDensity, SampleCost) {
  EXPECT_EQ(encoding_sample_cost(0.01), 461.0);
  EXPECT_EQ(encode_density(from_spectrum({1.0}, 2), 0.01, 0, EncodingNoise::kNoiseless).sample_cost(), 461.0);
  Constants k;
  k.encoding_multiplier = 2.0;
  EXPECT_EQ(encoding_sample_cost(0.01, k), 922.0);
}

TEST(EncodeDensity, NoisyPerturbationHasHalfBudgetNorm) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const DensityMatrix rho = random_density(6, 3, s);
    const BlockEncoding be = encode_density(rho, 0.01, derive_seed(s, 3));
    EXPECT_NEAR(oracle::op_norm_diff(be.encoded(), be.target()), 0.005, 1e-12);
    EXPECT_LE(oracle::op_norm_diff(be.encoded(), be.target()), be.eta());
  }
}

TEST(EncodeDensity, DeterministicPerSeed) {
  const DensityMatrix rho = random_density(4, 2, 1);
  const BlockEncoding a = encode_density(rho, 0.2, 5), b = encode_density(rho, 0.2, 5), c = encode_density(rho, 0.2, 6);
  EXPECT_EQ(oracle::op_norm_diff(a.encoded(), b.encoded()), 0.0);
  EXPECT_GT(oracle::op_norm_diff(a.encoded(), c.encoded()), 0.0);
}

TEST(EncodeDensity, DeltaOutOfRange) {
  const DensityMatrix rho = from_spectrum({1.0}, 2);
  EXPECT_THROW(encode_density(rho, 0.0, 1), Error);
  EXPECT_THROW(encode_density(rho, 0.6, 1), Error);
}

TEST(BlockEncoding, RejectsNormAboveOne) {
  try {
    exact(CMatrix::identity(2) * Complex(1.01, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomain);
  }
}

TEST(Dilate, ZeroBlock) {
  const DilatedUnitary u = dilate(exact(CMatrix(2)));
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_NEAR(std::abs(u.matrix(i, i + 2) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u.matrix(i + 2, i) - 1.0), 0.0, 1e-15);
    EXPECT_EQ(u.matrix(i, i), Complex(0, 0));
  }
  EXPECT_LE(unitarity_defect(u.matrix), Tolerances::unitary);
}

TEST(Dilate, ScalarBlock) {
  const CMatrix half = CMatrix::identity(3) * Complex(0.5, 0);
  const DilatedUnitary u = dilate(exact(half));
  EXPECT_LE(unitarity_defect(u.matrix), Tolerances::unitary);
  EXPECT_EQ(oracle::op_norm_diff(top_left_block(u.matrix, 3), half), 0.0);
}

TEST(Dilate, RandomStatesAndNoisyBlocks) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const DensityMatrix rho = random_density(4, 1 + static_cast<int>(s % 4), s);
    const BlockEncoding be = encode_density(rho, 0.3, s);
    const DilatedUnitary u = dilate(be);
    EXPECT_LE(oracle::op_norm_diff(u.matrix.adjoint() * u.matrix, CMatrix::identity(8)), 1e-10);
    const CMatrix back = top_left_block(u.matrix, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(back(i, j), be.encoded()(i, j));
  }
}

TEST(BeProduct, SquaredSpectrum) {
  const DensityMatrix rho = from_spectrum({0.5, 0.3, 0.2}, 3);
  const BlockEncoding be = encode_density(rho, 0.1, 0, EncodingNoise::kNoiseless);
  const BlockEncoding sq = be_product(be, be);
  const auto ev = oracle::eigenvalues(sq.target());
  EXPECT_NEAR(ev[2], std::pow(kPi4 * 0.5, 2), 1e-14);
  EXPECT_NEAR(ev[1], std::pow(kPi4 * 0.3, 2), 1e-14);
  EXPECT_NEAR(ev[0], std::pow(kPi4 * 0.2, 2), 1e-14);
  EXPECT_EQ(sq.ancillas(), 2);
  EXPECT_EQ(sq.sample_cost(), 2 * be.sample_cost());
}

TEST(BeProduct, ErrorComposition) {
  const DensityMatrix rho = random_density(4, 3, 2);
  const BlockEncoding a = encode_density(rho, 0.1, 1), b = encode_density(rho, 0.2, 2);
  EXPECT_NEAR(be_product(a, b).eta(), 0.1 + 0.2 + 0.02, 1e-15);
  const BlockEncoding e = exact(rho.matrix().matrix() * Complex(0.5, 0));
  EXPECT_EQ(be_product(e, e).eta(), 0.0);
}

TEST(BeProduct, ThreeFoldRescaledError) {
  const double eps = 0.06;
  const DensityMatrix rho = random_density(5, 4, 3);
  BlockEncoding acc = encode_density(rho, eps / 3, 10);
  for (int i = 1; i < 3; ++i) acc = be_product(acc, encode_density(rho, eps / 3, 10 + static_cast<std::uint64_t>(i)));
  EXPECT_LE(acc.eta(), eps + 2 * eps * eps);
  EXPECT_LE(oracle::op_norm_diff(acc.encoded(), acc.target()), acc.eta());
}

TEST(BeProduct, LinearAccumulation) {
  const DensityMatrix rho = random_density(4, 4, 4);
  for (int k = 1; k <= 8; ++k) {
    for (double delta : {0.01, 0.05, 0.1}) {
      BlockEncoding acc = encode_density(rho, delta / k, 1);
      for (int i = 1; i < k; ++i) acc = be_product(acc, encode_density(rho, delta / k, static_cast<std::uint64_t>(i) + 1));
      EXPECT_LE(acc.eta(), 1.1 * delta) << "k=" << k << " delta=" << delta;
      EXPECT_LE(oracle::op_norm_diff(acc.encoded(), acc.target()), acc.eta());
    }
  }
}

TEST(BeProduct, AssociativeOnNoiselessTriples) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const BlockEncoding a = encode_density(random_density(4, 2, s), 0.1, 0, EncodingNoise::kNoiseless);
    const BlockEncoding b = encode_density(random_density(4, 3, s + 10), 0.2, 0, EncodingNoise::kNoiseless);
    const BlockEncoding c = encode_density(random_density(4, 4, s + 20), 0.05, 0, EncodingNoise::kNoiseless);
    const BlockEncoding l = be_product(be_product(a, b), c), r = be_product(a, be_product(b, c));
    EXPECT_LE(oracle::op_norm_diff(l.target(), r.target()), 1e-12);
    EXPECT_NEAR(l.eta(), r.eta(), 1e-12);
  }
}

TEST(BeProduct, DimensionMismatch) {
  EXPECT_THROW(be_product(exact(CMatrix(2)), exact(CMatrix(3))), Error);
}

TEST(PurifiedEncode, BellState) {
  const double h = 1.0 / std::sqrt(2.0);
  const BlockEncoding be = purified_encode({h, 0, 0, h}, 2);
  EXPECT_LE(oracle::op_norm_diff(be.encoded(), CMatrix::identity(2) * Complex(0.5, 0)), 1e-15);
  EXPECT_EQ(be.eta(), 0.0);
}

TEST(PurifiedEncode, MaximallyMixedFour) {
  const BlockEncoding be = purified_encode(purify_maximally_mixed(4).state, 4);
  EXPECT_LE(oracle::op_norm_diff(be.encoded(), CMatrix::identity(4) * Complex(0.25, 0)), 1e-12);
  EXPECT_EQ(be.eta(), 0.0);
  EXPECT_EQ(be.subnorm(), 1.0);
}

TEST(PurifiedEncode, ProductState) {
  const Complex a(0.6, 0), b(0, 0.8);
  const BlockEncoding be = purified_encode({a, 0, b, 0}, 2);
  EXPECT_NEAR(std::abs(be.encoded()(0, 0) - a * std::conj(a)), 0, 1e-15);
  EXPECT_NEAR(std::abs(be.encoded()(0, 1) - a * std::conj(b)), 0, 1e-15);
  EXPECT_NEAR(std::abs(be.encoded()(1, 1) - b * std::conj(b)), 0, 1e-15);
}

TEST(PurifiedEncode, NonUnitNormRejected) { EXPECT_THROW(purified_encode({1.0, 0, 1.0, 0}, 2), Error); }
