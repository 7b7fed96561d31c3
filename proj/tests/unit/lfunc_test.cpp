#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "zdk/characters.hpp"
#include "zdk/detector.hpp"
#include "zdk/errors.hpp"
#include "zdk/lfunc.hpp"
#include "zdk/model.hpp"
#include "zdk/special.hpp"
#include "zdk/zeros.hpp"

using namespace zdk;
using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

namespace {

DirichletCharacter first_primitive(std::uint64_t q) { return DirichletCharacter::primitive(q).front(); }

// Number of sign changes of Z on a fine grid of (0, T].
int sign_changes(const LFunctionModel& m, double T) {
  int n = 0;
  double prev = lfunc::hardy_z(m, 1e-3);
  for (double t = 0.01; t <= T; t += 0.01) {
    const double z = lfunc::hardy_z(m, t);
    if ((z > 0) != (prev > 0)) ++n;
    prev = z;
  }
  return n;
}

}  // namespace

TEST(Special, HurwitzReducesToZeta) {
  EXPECT_NEAR(std::abs(special::hurwitz_zeta(2.0, 1.0) - kPi * kPi / 6), 0.0, 1e-10);
  const C lhs = special::hurwitz_zeta(3.0, 0.5);
  const C rhs = (std::pow(2.0, 3.0) - 1.0) * special::riemann_zeta(3.0);
  EXPECT_LT(std::abs(lhs - rhs), 1e-10);
}

TEST(Special, HurwitzAtZeroIsHalfMinusA) {
  // zeta(0, a) = 1/2 - a
  EXPECT_LT(std::abs(special::hurwitz_zeta(0.0, 0.3) - 0.2), 1e-10);
  EXPECT_THROW(special::hurwitz_zeta(1.0, 0.5), PoleAtOne);
}

TEST(Special, GammaAndDigamma) {
  EXPECT_NEAR(std::abs(special::gamma(5.0) - 24.0), 0.0, 1e-11);
  EXPECT_NEAR(std::abs(special::gamma(0.5) - std::sqrt(kPi)), 0.0, 1e-13);
  EXPECT_NEAR(special::digamma(1.0).real(), -0.57721566490153286, 1e-13);
  // Re digamma(1/2 + it) - log t -> 0 like 1/(24 t^2)
  EXPECT_NEAR(special::digamma(C(0.5, 100.0)).real(), std::log(100.0), 1e-5);
}

TEST(Characters, Mod4AndOrthogonality) {
  const auto chi = DirichletCharacter::mod4();
  EXPECT_EQ(chi(3), C(-1.0));
  EXPECT_EQ(chi.parity(), 1);
  for (std::uint64_t q = 3; q <= 12; ++q) {
    const auto all = DirichletCharacter::all(q);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        C s = 0.0;
        for (std::uint64_t a = 0; a < q; ++a) s += all[i](static_cast<std::int64_t>(a)) * std::conj(all[j](static_cast<std::int64_t>(a)));
        const double phi = static_cast<double>(std::count_if(all[0].values().begin(), all[0].values().end(),
                                                             [](C v) { return v != C(0.0); }));
        EXPECT_LT(std::abs(s - (i == j ? phi : 0.0)), 1e-10);
      }
  }
  EXPECT_TRUE(DirichletCharacter::primitive(8).size() == 2);
  EXPECT_TRUE(DirichletCharacter::primitive(6).empty());
}

TEST(Series, BaselValue) {
  EXPECT_NEAR(std::abs(lfunc::evaluate_series(zeta_model(), 2.0, 1000000, 1e-5) - kPi * kPi / 6), 0.0, 1e-6);
  EXPECT_THROW(lfunc::evaluate_series(zeta_model(), 2.0, 1000000), RegionError);
  EXPECT_THROW(lfunc::evaluate_series(zeta_model(), 0.9, 1000), RegionError);
}

TEST(Series, MatchesEulerProductAtFour) {
  for (const auto& model : {random_unitary_model(3, 2), random_unitary_model(2, 9, 5)}) {
    const C s(4.0, 1.5);
    const C a = lfunc::evaluate_series(model, s, 2000, 1e-6);
    const C b = lfunc::euler_product(model, s, 2000);
    const double tol = lfunc::series_tail_bound(model.m, 0.0, 4.0, 2000) * 2 + 1e-8;
    EXPECT_LT(std::abs(a - b), tol);
  }
}

TEST(Series, DegreeTwoDominatedByZetaSquared) {
  const double z2 = kPi * kPi / 6;
  const C v = lfunc::evaluate_series(random_unitary_model(2, 5), 2.0, 100000, 1e-2);
  EXPECT_LE(std::abs(v), z2 * z2 + lfunc::series_tail_bound(2, 0.0, 2.0, 100000));
}

TEST(DirichletL, LeibnizAndRealCentralValue) {
  EXPECT_NEAR(std::abs(lfunc::dirichlet_L(DirichletCharacter::mod4(), 1.0) - kPi / 4), 0.0, 1e-9);
  EXPECT_LT(std::abs(lfunc::dirichlet_L(first_primitive(3), 0.5).imag()), 1e-10);
  EXPECT_THROW(lfunc::dirichlet_L(DirichletCharacter::all(5).front(), 2.0), PrincipalCharacter);
}

TEST(FunctionalEquation, Examples) {
  const auto m4 = dirichlet_model(DirichletCharacter::mod4());
  EXPECT_LE(lfunc::functional_equation_residual(m4, 0.5).residual, 1e-9);
  for (const auto& chi : DirichletCharacter::primitive(5))
    EXPECT_LE(lfunc::functional_equation_residual(dirichlet_model(chi), C(0.3, 2.0)).residual, 1e-8);
  for (const auto& chi : DirichletCharacter::primitive(7)) {
    const C w = lfunc::root_number(dirichlet_model(chi));
    EXPECT_NEAR(std::abs(w), 1.0, 1e-8);
    EXPECT_LT(std::abs(w - chi.root_number_gauss()), 1e-8);
  }
}

TEST(Conductor, Examples) {
  EXPECT_DOUBLE_EQ(lfunc::analytic_conductor(zeta_model(), 0.0), 3.0);
  LFunctionModel m = zeta_model();
  m.m = 2;
  m.q = 11;
  m.kappas = {0.0, 1.0};
  EXPECT_DOUBLE_EQ(lfunc::analytic_conductor(m, 0.0), 132.0);
  EXPECT_EQ(lfunc::analytic_conductor(m, 7.0), lfunc::analytic_conductor(m, -7.0));
}

TEST(Mollifier, Examples) {
  const auto one = lfunc::make_mollifier(zeta_model(), 1.0);
  EXPECT_EQ(lfunc::mollifier_eval(one, C(0.3, 5.0)), C(1.0));
  const auto m = lfunc::make_mollifier(zeta_model(), 1e4);
  EXPECT_NEAR(std::abs(lfunc::mollifier_eval(m, 2.0) - 6 / (kPi * kPi)), 0.0, 1e-3);
}

TEST(Detector, FirstZeroOfModThree) {
  const auto model = dirichlet_model(first_primitive(3));
  const auto zeros = lfunc::critical_line_zeros(model, 10.0);
  ASSERT_FALSE(zeros.empty());
  lfunc::DetectionConfig cfg;
  cfg.A = 3.0;
  const auto rep = lfunc::zero_detector(model, C(0.5, zeros.front()), cfg);
  EXPECT_TRUE(rep.passed);
  EXPECT_LE(rep.identity_residual, 1e-2);

  const auto ctrl = lfunc::zero_detector(model, C(0.5, zeros.front() + 1.0), cfg);
  EXPECT_TRUE(ctrl.nonzero_input);
  EXPECT_FALSE(ctrl.passed);
}

TEST(Detector, RejectsBadConfig) {
  lfunc::DetectionConfig cfg;
  cfg.delta = 0.6;
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg.delta = 0.25;
  EXPECT_DOUBLE_EQ(cfg.resolved_A(), (3.0 - 0.25) / 0.5);
}

TEST(ZeroCount, ModFourRectangles) {
  const auto m4 = dirichlet_model(DirichletCharacter::mod4());
  EXPECT_EQ(lfunc::count_zeros_rectangle(m4, 0.6, 50.0), 0);
  EXPECT_EQ(lfunc::count_zeros_rectangle(m4, 0.0, 30.0), 2 * sign_changes(m4, 30.0));
  EXPECT_EQ(lfunc::count_zeros_rectangle(m4, 0.0, 3.0), 0);
}

TEST(ZeroCount, ZetaToOneHundred) {
  const int n = lfunc::count_zeros_rectangle(zeta_model(), 0.0, 100.0);
  EXPECT_EQ(n, 58);
  EXPECT_NEAR(lfunc::rvm_estimate(1, 1, 100.0), 100 / kPi * std::log(100 / (2 * kPi * std::exp(1.0))), 1e-12);
  EXPECT_LE(std::abs(n - lfunc::rvm_estimate(zeta_model(), 100.0)), 2 * std::log(100.0));
}

TEST(ZeroCount, EstimateDoublingSlope) {
  const double T = 1e4;
  const double d = lfunc::rvm_estimate(7, 2, 2 * T) - lfunc::rvm_estimate(7, 2, T);
  // E(2T) - 2 E(T) = (2T/pi) m log 2
  const double leading = T / kPi * 2 * std::log(2.0) * 2;
  EXPECT_LT(std::abs(d - lfunc::rvm_estimate(7, 2, T) - leading) / d, 0.01);
}

TEST(Zeros, FirstZetaOrdinates) {
  const auto z = lfunc::critical_line_zeros(zeta_model(), 26.0);
  ASSERT_EQ(z.size(), 3u);
  EXPECT_NEAR(z[0], 14.134725, 1e-5);
  EXPECT_NEAR(z[1], 21.022040, 1e-5);
  EXPECT_NEAR(z[2], 25.010858, 1e-5);
}
