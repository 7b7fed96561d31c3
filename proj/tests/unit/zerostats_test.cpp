#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "zdk/beurling_selberg.hpp"
#include "zdk/characters.hpp"
#include "zdk/errors.hpp"
#include "zdk/explicit_formula.hpp"
#include "zdk/model.hpp"
#include "zdk/poitou.hpp"
#include "zdk/zerostats.hpp"

using namespace zdk;
using namespace zdk::zerostats;
using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

namespace {

ZeroDataset toy(std::vector<double> g, bool symmetric, double tmax) {
  ZeroDataset zd;
  zd.label = "toy";
  zd.ordinates = std::move(g);
  zd.symmetric = symmetric;
  zd.T_max = tmax;
  return zd;
}

const ZeroDataset& zeta_to_1000() {
  static const ZeroDataset zd = computed_zeros(zeta_model(), 1000.0);
  return zd;
}

}  // namespace

TEST(Ingest, ThreeOrdinates) {
  std::istringstream in("14.134725\n21.022040\n25.010858\n");
  const auto zd = ingest_zeros(in, "zeta", 30.0);
  ASSERT_EQ(zd.ordinates.size(), 3u);
  EXPECT_EQ(zd.count_up_to(30.0), 6u);
  const auto own = computed_zeros(zeta_model(), 30.0);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(zd.ordinates[i], own.ordinates[i], 1e-5);
}

TEST(Ingest, EmptyBlankAndErrors) {
  std::istringstream empty("");
  EXPECT_TRUE(ingest_zeros(empty, "e", 10.0).ordinates.empty());
  std::istringstream comments("# header\n\n1.5\n");
  EXPECT_EQ(ingest_zeros(comments, "c", 10.0).ordinates.size(), 1u);
  std::istringstream unsorted("2.0\n1.0\n");
  EXPECT_THROW(ingest_zeros(unsorted, "u", 10.0), UnsortedInput);
  std::istringstream junk("1.0\nabc\n");
  try {
    ingest_zeros(junk, "j", 10.0);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(ingest_zeros(std::string("/nonexistent/zeros.txt"), "x", 10.0), ParseError);
  std::istringstream above("1.0\n5.0\n20.0\n");
  EXPECT_EQ(ingest_zeros(above, "a", 10.0).ordinates.size(), 2u);
}

TEST(Ingest, WriteReadRoundTrip) {
  const auto zd = computed_zeros(dirichlet_model(DirichletCharacter::primitive(5).front()), 20.0);
  std::stringstream ss;
  write_zeros(zd, ss);
  const auto back = ingest_zeros(ss, zd.label, zd.T_max, zd.symmetric);
  EXPECT_EQ(back.ordinates, zd.ordinates);
}

TEST(StarDiscrepancy, Examples) {
  EXPECT_DOUBLE_EQ(star_discrepancy({0.0, 0.5}), 0.5);
  std::vector<double> lattice;
  for (int k = 0; k < 10; ++k) lattice.push_back((2 * k + 1) / 20.0);
  EXPECT_NEAR(star_discrepancy(lattice), 0.05, 1e-15);
  EXPECT_THROW(star_discrepancy({}), ValidationError);
  EXPECT_THROW(star_discrepancy({1.0}), ValidationError);
}

TEST(StarDiscrepancy, MatchesBruteForce) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> pts(1000);
  for (auto& x : pts) x = u(rng);
  const double d = star_discrepancy(pts);
  EXPECT_NEAR(d, oracle::star_discrepancy_brute(pts), 1e-15);
  EXPECT_LT(d, 3.0 / std::sqrt(1000.0));
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> small(1 + rng() % 200);
    for (auto& x : small) x = u(rng);
    EXPECT_DOUBLE_EQ(star_discrepancy(small), oracle::star_discrepancy_brute(small));
  }
}

TEST(Frac, NegativeArguments) {
  EXPECT_DOUBLE_EQ(frac(-0.25), 0.75);
  EXPECT_DOUBLE_EQ(frac(3.0), 0.0);
  EXPECT_DOUBLE_EQ(frac(-2.0), 0.0);
}

TEST(Fujii, ZetaAtOneHundred) {
  const auto& zd = zeta_to_1000();
  const double d = fujii_statistic(zd, 1.0, 100.0);
  EXPECT_GT(d, 0.0);
  EXPECT_LT(d, 1.0);
  EXPECT_THROW(fujii_statistic(zd, 1.0, 2000.0), RangeError);
  EXPECT_THROW(fujii_statistic(zd, 0.0, 100.0), ValidationError);
}

TEST(Fujii, ToyDatasets) {
  EXPECT_DOUBLE_EQ(fujii_statistic(toy({1.0, 1.5}, false, 2.0), 1.0, 2.0), 0.5);
  const auto ints = toy({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, true, 12.0);
  EXPECT_NEAR(fujii_statistic(ints, 0.37, 12.0), fujii_statistic(ints, 1.37, 12.0), 1e-12);
}

TEST(LandauGonek, MainTermAtTwo) {
  const auto r = landau_gonek_sum(zeta_to_1000(), 2.0, 1000.0);
  EXPECT_EQ(r.nearest, 2);
  EXPECT_NEAR(r.main_term.real(), -(1000.0 / kPi) * std::log(2.0) / std::sqrt(2.0), 1e-9);
  EXPECT_LE(r.gap, 5 * 2 * std::log(2000.0));
}

TEST(LandauGonek, HalfIntegerTiesToEven) {
  const auto r = landau_gonek_sum(zeta_to_1000(), 6.5, 1000.0);
  EXPECT_EQ(r.nearest, 6);
  EXPECT_EQ(r.main_term, C(0.0));
  EXPECT_LE(std::abs(r.sum), 5 * std::sqrt(6.5) * std::log(6500.0));
}

TEST(LandauGonek, NoZerosBelowFirstOrdinate) {
  const auto r = landau_gonek_sum(zeta_to_1000(), 3.0, 1e-3);
  EXPECT_EQ(r.sum, C(0.0));
  EXPECT_LT(std::abs(r.main_term), 1e-3);
}

TEST(BeurlingSelberg, UnitIntervalMajorant) {
  for (const int M : {1, 5, 20}) {
    const auto [plus, minus] = beurling_selberg(Interval(0.0, 1.0), M);
    for (int i = 0; i < 1000; ++i) EXPECT_GE(plus(i / 1000.0), 1.0 - 1e-9);
    EXPECT_GE(plus.a(0).real(), 1.0 - 1e-12);
    EXPECT_LE(plus.a(0).real(), 1.0 + 1.0 / (M + 1) + 1e-12);
  }
}

TEST(BeurlingSelberg, HalfIntervalConstantTerm) {
  const auto [plus, minus] = beurling_selberg(Interval(0.0, 0.5), 10);
  EXPECT_LE(std::abs(plus.a(0) - 0.5), 1.0 / 11 + 1e-12);
  EXPECT_LE(std::abs(minus.a(0) - 0.5), 1.0 / 11 + 1e-12);
  const auto rep = check_beurling_selberg(plus, minus);
  EXPECT_LE(rep.max_violation, 1e-9);
  EXPECT_LE(rep.max_coeff_excess, 1e-12);
  EXPECT_TRUE(rep.hermitian);
}

TEST(BeurlingSelberg, DegenerateInterval) {
  const auto [plus, minus] = beurling_selberg(Interval(0.3, 0.3), 8);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_GE(plus(i / 1000.0), -1e-9);
    EXPECT_LE(minus(i / 1000.0), 1e-9);
  }
  EXPECT_THROW(beurling_selberg(Interval(0.0, 0.5), 0), ValidationError);
  EXPECT_THROW(Interval(0.5, 0.2), ValidationError);
}

TEST(BeurlingSelberg, CoefficientsMatchQuadrature) {
  // coefficients of a degree-M polynomial read back by Simpson on [0, 1]
  const auto [plus, minus] = beurling_selberg(Interval(0.1, 0.45), 6);
  for (int n = -6; n <= 6; ++n) {
    const double re = oracle::simpson([&](double t) { return plus(t) * std::cos(2 * kPi * n * t); }, 0.0, 1.0, 2000);
    const double im = oracle::simpson([&](double t) { return -plus(t) * std::sin(2 * kPi * n * t); }, 0.0, 1.0, 2000);
    EXPECT_LT(std::abs(plus.a(n) - C(re, im)), 1e-9) << n;
  }
}

TEST(Family, BoundDominatesDirect) {
  const auto fb = family_equidistribution({zeta_to_1000()}, 1.0, 500.0, 8);
  EXPECT_GE(fb.bound, fujii_statistic(zeta_to_1000(), 1.0, 500.0));
  EXPECT_LE(fb.direct, fb.bound + 1e-6);
  EXPECT_GE(family_equidistribution({zeta_to_1000()}, 1.0, 500.0, 1).bound, 1.0);
  EXPECT_THROW(family_equidistribution({zeta_to_1000()}, 1.0, 5000.0, 8), IncompleteDataset);
}

TEST(Family, AveragingHelps) {
  std::vector<ZeroDataset> family;
  for (const std::uint64_t q : {3u, 4u, 5u, 7u}) family.push_back(computed_zeros(dirichlet_model(DirichletCharacter::primitive(q).front()), 100.0));
  const auto fb = family_equidistribution(family, 1.0, 100.0, 8);
  EXPECT_LT(fb.bound, fb.worst_single);
  EXPECT_LE(fb.direct, fb.bound + 1e-6);
}

TEST(Family, ChooseM) {
  EXPECT_EQ(choose_M(0.5, 100.0, 1.0), 1);
  const double T = 1e30;
  EXPECT_EQ(choose_M(0.5, T, 0.01), static_cast<int>(0.5 * std::log(T) / (6 * kPi * 0.01 * std::log(std::log(T)))));
  EXPECT_EQ(choose_M(0.5, T, -0.01), choose_M(0.5, T, 0.01));
}

TEST(Poitou, GoldenConstant) {
  std::ifstream in(std::string(ZDK_TEST_DATA_DIR) + "/poitou_golden.json");
  ASSERT_TRUE(in.good());
  const auto g = nlohmann::json::parse(in);
  const double want = g.at("psi_hat_at_zero").get<double>();
  EXPECT_NEAR(poitou_transform(C(0.0)).real(), want, g.at("tolerance").get<double>());
  // independent Simpson quadrature of the integral of psi
  EXPECT_NEAR(2 * oracle::simpson(poitou_psi, 0.0, 1.0, 20000), want, 1e-12);
}

TEST(Poitou, EvenAndPositiveOnStrip) {
  const C z(0.3, 2.0);
  EXPECT_LT(std::abs(poitou_transform(z) - poitou_transform(-z)), 1e-10);
  EXPECT_GE(poitou_transform(C(1.0, 40.0)).real(), -1e-10);
  EXPECT_EQ(poitou_psi(1.5), 0.0);
  EXPECT_DOUBLE_EQ(poitou_psi(0.0), 1.0);
  const auto rep = validate_poitou();
  EXPECT_GE(rep.min_re_transform, -1e-10);
  EXPECT_GE(rep.min_psi, 0.0);
  EXPECT_LT(rep.even_defect, 1e-15);
}

TEST(ExplicitFormula, ModFourAtTen) {
  const auto model = dirichlet_model(DirichletCharacter::mod4());
  const auto zd = computed_zeros(model, 200.0);
  const auto rep = explicit_formula_balance(model, zd, 10.0);
  EXPECT_LE(rep.residual, 1e-3);
  EXPECT_LE(rep.tail_bound, 1e-5);
  EXPECT_THROW(explicit_formula_balance(model, zd, 1.005), ValidationError);
  EXPECT_THROW(explicit_formula_balance(model, computed_zeros(model, 20.0), 3.0), IncompleteDataset);
}

TEST(ExplicitFormula, CentralZero) {
  // a dataset whose first ordinate sits at the central point
  const auto zd = toy({0.0, 6.0, 9.5}, true, 10.0);
  const auto rep = central_order_check(zd, 20.0);
  EXPECT_EQ(rep.central_order, 1);
  EXPECT_GE(rep.near_sum, rep.lower_bound - 1e-6);
}
