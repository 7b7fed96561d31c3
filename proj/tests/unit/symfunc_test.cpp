#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "zdk/errors.hpp"
#include "zdk/symfunc.hpp"

using namespace zdk::symfunc;
using C = std::complex<double>;

namespace {

SatakeVector conj_pair(double theta) { return SatakeVector({std::polar(1.0, theta), std::polar(1.0, -theta)}); }

}  // namespace

TEST(Partition, StripsTrailingZerosAndRejectsIncreasing) {
  EXPECT_EQ(Partition({2, 1, 0, 0}).parts(), (std::vector<int>{2, 1}));
  EXPECT_THROW(Partition({1, 2}), zdk::ValidationError);
  EXPECT_THROW(conj_pair(0.1).satisfies_ramanujan_bound(0.0), zdk::ValidationError);
  EXPECT_EQ(Partition({3, 2, 1}).size(), 6);
}

TEST(Partition, EnumerationCounts) {
  // p(5) = 7; with at most 2 parts: 5, 41, 32
  EXPECT_EQ(Partition::all_of_size(5, 5).size(), 7u);
  EXPECT_EQ(Partition::all_of_size(5, 2).size(), 3u);
  EXPECT_EQ(Partition::all_up_to(4, 3).size(), 1u + 1 + 2 + 3 + 4);
}

TEST(Partition, ShiftAndStrip) {
  const Partition p{2, 1};
  EXPECT_EQ(p.shifted(2, 3), (Partition{4, 3, 2}));
  EXPECT_EQ(Partition({4, 3, 2}).strip_full_columns(3), p);
}

TEST(Schur, ConjugatePairAtLambdaOneIsZero) {
  const SatakeVector sv({C{0, 1}, C{0, -1}});
  EXPECT_LT(std::abs(schur_bialternant(sv, Partition{1})), 1e-14);
}

TEST(Schur, AllOnesUsesFallback) {
  const SatakeVector sv({1.0, 1.0, 1.0});
  EXPECT_NEAR(std::abs(schur_bialternant(sv, Partition{2, 1}) - 8.0), 0.0, 1e-12);
  SchurOptions strict;
  strict.allow_fallback = false;
  EXPECT_THROW(schur_bialternant(sv, Partition{2, 1}, strict), zdk::ConfluentParameters);
}

TEST(Schur, SixthRootPairVanishesAtLambdaTwo) {
  const auto v = schur_bialternant(conj_pair(std::numbers::pi / 3), Partition{2});
  EXPECT_LT(std::abs(v), 1e-12);
}

TEST(Schur, TableauSmallCases) {
  const SatakeVector any = conj_pair(0.7);
  EXPECT_EQ(schur_tableau_oracle(any, Partition{}), C(1.0));
  EXPECT_NEAR(std::abs(schur_tableau_oracle(SatakeVector({1.0, 1.0, 1.0}), Partition{1, 1, 1}) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(schur_tableau_oracle(SatakeVector({2.0, 0.5}), Partition{2}).real(), 5.25, 1e-14);
  EXPECT_THROW(schur_tableau_oracle(any, Partition{13}), zdk::SizeLimit);
}

TEST(Schur, RoutesAgreeWithJacobiTrudiOracle) {
  std::mt19937_64 rng(7);
  for (int m = 1; m <= 4; ++m) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = oracle::random_det_one(m, rng);
      const SatakeVector sv(x);
      for (const auto& lam : Partition::all_up_to(7, m)) {
        const C want = oracle::schur(x, lam.parts());
        const double scale = std::max(std::abs(want), 1.0);
        EXPECT_LT(std::abs(schur_bialternant(sv, lam) - want) / scale, 1e-10);
        EXPECT_LT(std::abs(schur_tableau_oracle(sv, lam) - want) / scale, 1e-10);
        EXPECT_LT(std::abs(schur_jacobi_trudi(sv, lam) - want) / scale, 1e-10);
      }
    }
  }
}

TEST(Schur, CountSsytMatchesAllOnesValue) {
  const SatakeVector ones({1.0, 1.0, 1.0});
  for (const auto& lam : Partition::all_up_to(6, 3))
    EXPECT_NEAR(schur_tableau_oracle(ones, lam).real(), static_cast<double>(count_ssyt(lam, 3)), 1e-9);
  // hook content formula for (3,1) with m = 3: 15
  EXPECT_EQ(count_ssyt(Partition{3, 1}, 3), 15u);
}

TEST(Elementary, MatchesProductExpansion) {
  const std::vector<C> a{C{1, 2}, C{-0.5, 0.1}, C{0.3, -1}};
  const auto e = elementary_symmetric(a);
  ASSERT_EQ(e.size(), 4u);
  EXPECT_NEAR(std::abs(e[1] - (a[0] + a[1] + a[2])), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(e[2] - (a[0] * a[1] + a[0] * a[2] + a[1] * a[2])), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(e[3] - a[0] * a[1] * a[2]), 0.0, 1e-14);
}

TEST(Fourier, Examples) {
  std::mt19937_64 rng(3);
  const SatakeVector sv3(oracle::random_det_one(3, rng));
  EXPECT_NEAR(std::abs(fourier_coefficient(sv3, ExponentTuple{0, 0}) - 1.0), 0.0, 1e-14);

  const double th = std::numbers::pi / 5;
  const C b = fourier_coefficient(conj_pair(th), ExponentTuple{3});
  EXPECT_NEAR(b.real(), std::sin(4 * th) / std::sin(th), 1e-12);
  EXPECT_NEAR(b.imag(), 0.0, 1e-12);

  EXPECT_NEAR(fourier_coefficient(SatakeVector({1.0, 1.0, 1.0}), ExponentTuple{1, 0}).real(), 3.0, 1e-12);
}

TEST(Fourier, InducedPartitionAndReverse) {
  const ExponentTuple t{2, 0, 1};
  EXPECT_EQ(t.degree(), 4);
  EXPECT_EQ(t.induced_partition(), (Partition{3, 2, 2}));
  EXPECT_EQ(t.reversed(), (ExponentTuple{1, 0, 2}));
}

TEST(PowerSum, Examples) {
  const double th = 0.4;
  EXPECT_NEAR(power_sum(conj_pair(th), 3).real(), 2 * std::cos(3 * th), 1e-13);
  for (int m = 1; m <= 5; ++m)
    EXPECT_NEAR(power_sum(SatakeVector(std::vector<C>(static_cast<std::size_t>(m), 1.0)), 5).real(), m, 1e-12);
  std::mt19937_64 rng(11);
  const SatakeVector sv(oracle::random_det_one(4, rng));
  EXPECT_LT(std::abs(power_sum(sv, 1) - fourier_coefficient(sv, ExponentTuple{0, 0, 1})), 1e-12);
}

TEST(HookIdentity, Examples) {
  EXPECT_EQ(hook_identity_residual(conj_pair(1.1), 1), 0.0);
  std::mt19937_64 rng(5);
  EXPECT_LE(hook_identity_residual(SatakeVector(oracle::random_det_one(4, rng)), 6), 1e-10);
  EXPECT_LE(hook_identity_residual(SatakeVector({1.0, 1.0, 1.0}), 2), 1e-12);
}

TEST(ShiftInvariance, Examples) {
  EXPECT_EQ(shift_invariance_residual(SatakeVector({1.0, -1.0, -1.0}), Partition{}, 1), 0.0);
  std::mt19937_64 rng(9);
  const SatakeVector sv(oracle::random_det_one(3, rng));
  EXPECT_LE(shift_invariance_residual(conj_pair(0.9), Partition{1}, 2), 1e-12);
  const double s = std::abs(schur_bialternant(sv, Partition{2, 1}));
  EXPECT_LE(shift_invariance_residual(sv, Partition{2, 1}, 3), 1e-10 * (1 + s));
}

TEST(Satake, Flags) {
  const SatakeVector u({std::polar(1.0, 0.2), std::polar(1.0, -0.2)}, 2);
  EXPECT_TRUE(u.unitary());
  EXPECT_TRUE(u.det_one());
  EXPECT_TRUE(u.satisfies_ramanujan_bound(0.0));
  const SatakeVector big({2.0, 0.5}, 3);
  EXPECT_FALSE(big.unitary());
  EXPECT_TRUE(big.det_one());
  EXPECT_FALSE(big.satisfies_ramanujan_bound(0.5));  // 3^0.5 < 2
  EXPECT_TRUE(big.satisfies_ramanujan_bound(0.7));
  EXPECT_DOUBLE_EQ(ramanujan_exponent(2), 0.5 - 1.0 / 5);
}
