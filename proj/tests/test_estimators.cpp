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
#include "entropybench/estimators.hpp"
#include "entropybench/rng.hpp"
#include "oracles.hpp"

using namespace entropybench;

namespace {

constexpr double kPi4 = std::numbers::pi / 4.0;

const DensityMatrix& diag3() {
  static const DensityMatrix rho = from_spectrum({0.5, 0.3, 0.2}, 3);
  return rho;
}
const DensityMatrix& diag8() {
  static const DensityMatrix rho = from_spectrum({0.5, 0.3, 0.2}, 8);
  return rho;
}
DensityMatrix pure(int d) { return from_spectrum({1.0}, d); }
DensityMatrix mixed(int d) { return from_spectrum(std::vector<double>(static_cast<std::size_t>(d), 1.0 / d), d); }

EstimatorOptions ideal() {
  EstimatorOptions o;
  o.ideal = true;
  return o;
}

double oracle_entropy(const DensityMatrix& rho, double a) { return oracle::entropy(rho.matrix(), a); }

}  // namespace

TEST(MeasureP0, CertainOutcomes) {
  EXPECT_EQ(measure_p0({0.0, MeasureMode::kBernoulli, 1.0}, 0.01, 3).estimate, 0.0);
  EXPECT_EQ(measure_p0({1.0, MeasureMode::kBernoulli, 1.0}, 0.01, 3).estimate, 1.0);
}

TEST(MeasureP0, BernoulliConcentration) {
  int inside = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const Measurement m = measure_p0({0.38, MeasureMode::kBernoulli, 1.0}, 0.01, derive_seed(11, s));
    EXPECT_EQ(m.queries, 10000.0);
    if (std::abs(m.estimate - 0.38) <= 0.03) ++inside;
  }
  EXPECT_GE(inside, 990);
}

TEST(MeasureP0, UnbiasedWithinThreeStandardErrors) {
  for (double p : {0.1, 0.38, 0.5, 0.93}) {
    const double delta = 1.0 / std::sqrt(1e5);
    const Measurement m = measure_p0({p, MeasureMode::kBernoulli, 1.0}, delta, 2024);
    EXPECT_NEAR(m.queries, 1e5, 1.0);
    EXPECT_LE(std::abs(m.estimate - p), 3.0 * std::sqrt(p * (1 - p) / m.queries)) << p;
  }
}

TEST(MeasureP0, AmplitudeEstimationModel) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Measurement m = measure_p0({0.2, MeasureMode::kAmplitudeEstimation, 1.0}, 0.01, s);
    EXPECT_EQ(m.queries, 100.0);
    EXPECT_LE(std::abs(m.estimate - 0.2), 0.01);
  }
  EXPECT_EQ(measure_p0({0.2, MeasureMode::kBernoulli, 1.0}, 0.01, 1).queries, 10000.0);
}

TEST(MeasureP0, DeterministicAndThreadInvariant) {
  const MeasurementModel m{0.3, MeasureMode::kBernoulli, 1.0};
  const double delta = 1.5e-5;  // several 2^30 batches
  const Measurement a = measure_p0(m, delta, 77, 1);
  const Measurement b = measure_p0(m, delta, 77, 4);
  const Measurement c = measure_p0(m, delta, 78, 1);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_NE(a.estimate, c.estimate);
  EXPECT_GT(a.queries, 4.0 * (1 << 30));
}

TEST(MeasureP0, Preconditions) {
  EXPECT_THROW(measure_p0({0.3, MeasureMode::kBernoulli, 1.0}, 0.0, 1), Error);
  EXPECT_THROW(measure_p0({0.3, MeasureMode::kBernoulli, 1.0}, 1.0, 1), Error);
}

TEST(ClosedForms, CaseOne) {
  EXPECT_NEAR(ideal_p0_case1(pure(4), 1, 0.0), kPi4 * kPi4, 1e-15);
  EXPECT_NEAR(ideal_p0_case1(pure(4), 1, 0.0), 0.61685, 5e-6);
  const double tr25 = oracle::tr_pow({0.5, 0.3, 0.2}, 2.5);
  EXPECT_NEAR(ideal_p0_case1(diag3(), 0, 1.5), std::pow(kPi4, 1.5) * tr25, 1e-15);
  EXPECT_NEAR(ideal_p0_case1(diag3(), 0, 1.5), 0.169806, 5e-6);
  EXPECT_NEAR(ideal_p0_case1(mixed(2), 0, 0.5), 0.62666, 5e-6);
}

TEST(ClosedForms, CaseTwo) {
  const double want = 0.25 * kPi4 * kPi4 * std::pow(0.5, 0.6) * 2 * std::pow(0.5, 2.4);
  EXPECT_NEAR(ideal_p0_case2(mixed(2), 1, -0.6), want, 1e-15);
  const double tr45 = oracle::tr_pow({0.5, 0.3, 0.2}, 4.5);
  EXPECT_NEAR(ideal_p0_case2(diag3(), 2, -0.5), 0.25 * std::pow(kPi4, 4) * std::sqrt(0.2) * tr45, 1e-15);
  EXPECT_NEAR(ideal_p0_case2(pure(1), 2, 0.0), 0.25 * std::pow(kPi4, 4), 1e-15);
  EXPECT_THROW(ideal_p0_case2(diag8(), 1, -0.5), Error);
}

TEST(ClosedForms, SubOne) {
  EXPECT_NEAR(ideal_p0_sub_one(pure(4), 0.5, 4), std::sqrt(std::numbers::pi) / 32.0, 1e-15);
  EXPECT_NEAR(ideal_p0_sub_one(pure(4), 0.5, 4), 0.055389, 5e-7);
}

TEST(RenyiInteger, Fixtures) {
  const auto p = renyi_integer(pure(4), 2, 0.05, 1);
  EXPECT_EQ(p.estimate, 0.0);
  EXPECT_EQ(p.branch, Branch::kInteger);
  EXPECT_NEAR(renyi_integer(mixed(4), 3, 0.01, 1, ideal()).estimate, std::log(4.0), 1e-12);
  EXPECT_NEAR(renyi_integer(mixed(4), 3, 0.05, 1).estimate, 1.386294, 0.05);
}

TEST(RenyiInteger, LedgerAndBudget) {
  const auto r = renyi_integer(diag8(), 3, 0.05, 9);
  const double delta = 2 * 0.05 / (2 * 9.0);
  EXPECT_NEAR(r.delta, delta, 1e-15);
  EXPECT_EQ(r.shots_used, std::ceil(4.0 / (delta * delta)));
  EXPECT_EQ(r.sample_cost_total, 3.0 * r.shots_used);
  ASSERT_TRUE(r.exact_value.has_value());
  EXPECT_NEAR(*r.exact_value, oracle_entropy(diag8(), 3.0), 1e-12);
}

TEST(RenyiInteger, StatisticalCoverage) {
  int hits = 0;
  for (std::uint64_t t = 0; t < 100; ++t)
    if (renyi_integer(diag8(), 2, 0.05, derive_seed(1, t)).pass()) ++hits;
  EXPECT_GE(hits, 95);
}

TEST(RenyiCaseOdd, IdealDiagonal) {
  const auto r = renyi_case_odd(diag3(), 1.5, 1e-3, 1, ideal());
  EXPECT_NEAR(r.estimate, 0.997422, 5e-7);
  EXPECT_NEAR(r.estimate, oracle_entropy(diag3(), 1.5), 1e-7);
  EXPECT_NEAR(r.p0_realized, r.p0_closed_form, 1e-8);
  EXPECT_EQ(r.branch, Branch::kOddFloor);
}

TEST(RenyiCaseOdd, PureStateAnyOrder) {
  for (double a : {1.5, 3.3, 5.6}) {
    const auto r = renyi_case_odd(pure(3), a, 1e-3, 1, ideal());
    EXPECT_NEAR(r.estimate, 0.0, 1e-7) << a;
    EXPECT_NEAR(r.p0_closed_form, 0.25 * std::pow(kPi4, a - 1.0), 1e-15);
  }
}

TEST(RenyiCaseOdd, RejectsWrongBranch) {
  EXPECT_THROW(renyi_case_odd(diag3(), 2.5, 1e-3, 1), Error);
  EXPECT_THROW(renyi_case_odd(diag3(), 3.0, 1e-3, 1), Error);
}

TEST(RenyiCaseEven, IdealFixtures) {
  EXPECT_NEAR(renyi_case_even(mixed(4), 2.5, 1e-3, 1, ideal()).estimate, std::log(4.0), 1e-7);
  const auto r = renyi_case_even(diag3(), 4.5, 1e-3, 1, ideal());
  EXPECT_NEAR(r.estimate, oracle_entropy(diag3(), 4.5), 1e-7);
  EXPECT_NEAR(r.p0_realized, r.p0_closed_form, 1e-8);
  EXPECT_NEAR(r.rho_min_sensitivity, -0.5 / ((1 - 4.5) * 0.2), 1e-12);
}

TEST(RenyiCaseEven, RankDeficientNeedsSupportProjection) {
  EstimatorOptions o = ideal();
  EXPECT_NO_THROW(renyi_case_even(diag8(), 2.5, 1e-3, 1, o));
  o.support_projection = false;
  EXPECT_THROW(renyi_case_even(diag8(), 2.5, 1e-3, 1, o), Error);
}

TEST(RenyiSubOne, Fixtures) {
  const auto p = renyi_sub_one(pure(4), 0.5, 1e-3, 1, ideal());
  EXPECT_NEAR(p.estimate, 0.0, 1e-7);
  EXPECT_NEAR(p.p0_closed_form, std::sqrt(std::numbers::pi) / 32.0, 1e-15);
  EXPECT_NEAR(renyi_sub_one(mixed(4), 0.5, 1e-3, 1, ideal()).estimate, std::log(4.0), 1e-7);
  EXPECT_NEAR(std::exp(0.5 * renyi_sub_one(mixed(4), 0.5, 1e-3, 1, ideal()).estimate), 2.0, 1e-7);
}

TEST(RenyiSubOne, AmplitudeEstimationPath) {
  EstimatorOptions o = ideal();
  o.sub_one_method = SubOneMethod::kAmplitudeEstimation;
  EXPECT_NEAR(renyi_sub_one(diag8(), 0.5, 1e-3, 1, o).estimate, oracle_entropy(diag8(), 0.5), 1e-6);
  EXPECT_THROW(renyi_sub_one(from_spectrum({0.5, 0.5}, 6), 0.5, 1e-3, 1, o), Error);
}

TEST(RenyiSubOne, AmplitudeCostBelowSampling) {
  EstimatorOptions ae;
  ae.sub_one_method = SubOneMethod::kAmplitudeEstimation;
  const auto a = renyi_sub_one(diag8(), 0.5, 0.05, 1, ae);
  const auto s = renyi_sub_one(diag8(), 0.5, 0.05, 1);
  EXPECT_LT(a.shots_used, s.shots_used);
}

TEST(VnQsvt, Fixtures) {
  const auto p = vn_qsvt(pure(3), 1e-3, 1, ideal());
  EXPECT_NEAR(p.estimate, 0.0, 1e-6);
  const auto d = vn_qsvt(diag3(), 1e-3, 1, ideal());
  EXPECT_NEAR(d.estimate, 1.029653, 1e-6);
  EXPECT_NEAR(vn_qsvt(mixed(2), 1e-3, 1, ideal()).estimate, std::numbers::ln2, 1e-6);
  EXPECT_EQ(d.branch, Branch::kVonNeumann);
}

TEST(VnPoly, Fixtures) {
  EXPECT_NEAR(vn_poly(pure(3), 0.05, 1).estimate, 0.0, 0.05);
  EXPECT_NEAR(vn_poly(mixed(2), 0.05, 1).estimate, std::numbers::ln2, 0.05);
  EXPECT_NEAR(vn_poly(diag3(), 1e-3, 1, ideal()).estimate, 1.029653, 1e-3);
}

TEST(VnApproaches, AgreeOnRandomStates) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const DensityMatrix rho = random_density(3 + static_cast<int>(s % 4), 3 + static_cast<int>(s % 4), s + 900);
    if (rho.meta().rho_min < 0.03) continue;
    const double eps = 0.01;
    const double q = vn_qsvt(rho, eps, s, ideal()).estimate;
    const double p = vn_poly(rho, eps, s, ideal()).estimate;
    EXPECT_NEAR(q, p, 2 * eps);
    EXPECT_NEAR(q, oracle_entropy(rho, 1.0), eps);
  }
}

TEST(RegimeConsistency, NearBoundaries) {
  const DensityMatrix rho = random_density(4, 4, 4242);
  for (double a : {1.0 + 1e-4, 2.0 - 1e-4, 2.0 + 1e-4, 2.5, 1.0 - 1e-4}) {
    const auto r = estimate_entropy(rho, a, 1e-3, 1, ideal());
    EXPECT_NEAR(r.estimate, oracle_entropy(rho, a), 1e-3) << a << " " << branch_name(r.branch);
  }
}

TEST(IdealPipeline, MatchesOracleOnRandomStates) {
  for (std::uint64_t i = 0; i < 12; ++i) {
    const int d = 2 + static_cast<int>(i % 7);
    const DensityMatrix rho = random_density(d, std::min(d, 1 + static_cast<int>(i % 4)), i + 70);
    for (double a : {1.3, 2.5, 3.5, 6.4}) {
      const auto r = estimate_entropy(rho, a, 1e-3, 1, ideal());
      EXPECT_NEAR(r.estimate, oracle_entropy(rho, a), 1e-5);
      EXPECT_NEAR(r.p0_realized, r.p0_closed_form, 1e-6);
    }
  }
}

TEST(NoisyPipeline, LedgerCoversRealizedDeviation) {
  for (std::uint64_t i = 0; i < 12; ++i) {
    const DensityMatrix rho = random_density(4, 2 + static_cast<int>(i % 3), i + 10);
    for (double a : {0.6, 1.0, 1.5, 2.5, 3.4}) {
      const auto r = estimate_entropy(rho, a, 0.1, i, {});
      EXPECT_LE(std::abs(r.p0_realized - r.p0_closed_form), r.eta) << a;
    }
  }
}

TEST(ShotCost, NonIncreasingInEps) {
  for (double a : {0.5, 1.0, 1.5, 2.0, 2.5}) {
    double prev = INFINITY;
    for (double eps : {0.02, 0.05, 0.1, 0.2}) {
      const double shots = estimate_entropy(diag8(), a, eps, 3).shots_used;
      EXPECT_LE(shots, prev) << a;
      EXPECT_GE(shots, 1.0);
      prev = shots;
    }
  }
}

TEST(Reports, Deterministic) {
  const auto a = estimate_entropy(diag8(), 2.5, 0.05, 123);
  const auto b = estimate_entropy(diag8(), 2.5, 0.05, 123);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.sample_cost_total, b.sample_cost_total);
}

TEST(Reports, LedgerExceedsShots) {
  for (double a : {0.5, 1.5, 2.0, 2.5}) {
    const auto r = estimate_entropy(diag8(), a, 0.1, 1);
    EXPECT_GE(r.sample_cost_total, r.shots_used) << a;
    EXPECT_GT(r.predicted_budget, 0.0);
  }
}

TEST(BlindMode, UsesEstimatedParameters) {
  EstimatorOptions o;
  o.blind = true;
  const auto r = estimate_entropy(diag8(), 2.5, 0.05, 5, o);
  EXPECT_TRUE(r.blind);
  EXPECT_NEAR(r.rho_min_used, 0.2, 0.01);
  EXPECT_LE(r.rho_min_used, 0.2);
  EXPECT_NEAR(r.estimate, oracle_entropy(diag8(), 2.5), 0.05);
  const auto s = estimate_entropy(diag8(), 0.5, 0.05, 5, o);
  EXPECT_NEAR(s.estimate, oracle_entropy(diag8(), 0.5), 0.05);
}

TEST(MinEig, NoiselessDiagonal) {
  const BlockEncoding be = encode_density(diag3(), 0.01, 0, EncodingNoise::kNoiseless);
  const MinEigEstimate m = min_eig_estimate(be, 0.0, 1);
  EXPECT_NEAR(m.scaled, std::numbers::pi * 0.2 / 4.0, 1e-12);
  EXPECT_NEAR(m.scaled, 0.15708, 5e-6);
  EXPECT_NEAR(m.rho_min, 0.2, 1e-12);
  EXPECT_EQ(m.cost, 0.0);
}

TEST(MinEig, PureWithSupportProjection) {
  const BlockEncoding be = encode_density(support_projection(pure(4)), 0.01, 0, EncodingNoise::kNoiseless);
  EXPECT_NEAR(min_eig_estimate(be, 0.0, 1).rho_min, 1.0, 1e-12);
}

TEST(MinEig, BoundedNoise) {
  const BlockEncoding be = encode_density(diag3(), 0.01, 0, EncodingNoise::kNoiseless);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const MinEigEstimate m = min_eig_estimate(be, 0.01, s);
    EXPECT_LE(std::abs(m.scaled - std::numbers::pi * 0.05), 0.01);
    EXPECT_GT(m.cost, 0.0);
  }
  EXPECT_THROW(min_eig_estimate(be, 1.0, 1), Error);
}
