#include "zdk/explicit_formula.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "zdk/coeffs.hpp"
#include "zdk/errors.hpp"
#include "zdk/poitou.hpp"
#include "zdk/special.hpp"

namespace zdk::zerostats {

namespace {

constexpr double kPi = std::numbers::pi;
using Gauss = boost::math::quadrature::gauss<double, 20>;

// Psi(iy) = 2 int_0^1 psi(t) cos(y t) dt, real since psi is even.
double psi_hat_imag_axis(double y) {
  const int panels = 2 + static_cast<int>(std::ceil(std::abs(y) / 8.0));
  const double h = 1.0 / panels;
  double acc = 0.0;
  for (int i = 0; i < panels; ++i)
    acc += Gauss::integrate([&](double t) { return poitou_psi(t) * std::cos(y * t); }, i * h, (i + 1) * h);
  return 2.0 * acc;
}

// Bound for int_R^inf (log(1 + r) + 2) C (1 + rL)^{-4} dr, crude but monotone in R.
double r_tail(double R, double L, double C) {
  return C * (std::log(1.0 + R) + 2.0) / (3.0 * std::pow(L, 4) * R * R * R);
}

}  // namespace

ExplicitFormulaReport explicit_formula_balance(const LFunctionModel& model, const ZeroDataset& zeros, double x) {
  if (!(x > 1.0) || std::log(x) < 1e-2) throw ValidationError("explicit formula needs log x >= 1e-2");
  zeros.validate();
  const double L = std::log(x);
  const double C4 = poitou_envelope_k4();
  ExplicitFormulaReport rep;
  rep.x = x;

  // Zeros above H = T_max: two-sided density (m/pi) log(q g / 2pi), plus f(H) times a
  // generous allowance for the error term of the zero count at H.
  {
    const double H = std::max(zeros.T_max, 1.0);
    const double q = static_cast<double>(model.q);
    const double Cb = poitou_envelope_k4_beyond(H * L);
    auto f = [&](double g) { return Cb * std::pow(g * L, -4); };
    auto density = [&](double g) { return model.m / kPi * std::max(0.0, std::log(q * g / (2.0 * kPi))); };
    double tail = 0.0;
    for (double a = H; a < 1e12 * H; a *= 2.0) tail += Gauss::integrate([&](double g) { return f(g) * density(g); }, a, 2.0 * a);
    rep.tail_bound = tail + f(H) * (model.m * std::log(q * (H + 3.0)) + 5.0);
  }
  if (rep.tail_bound > 1e-5)
    throw IncompleteDataset("zeros above T = " + std::to_string(zeros.T_max) + " may contribute up to " +
                            std::to_string(rep.tail_bound));

  for (const Complex& rho : zeros.zeros_up_to(zeros.T_max)) rep.zero_side += poitou_transform((rho - 0.5) * L);

  rep.conductor_term = (std::log(static_cast<double>(model.q)) - model.m * std::log(kPi)) / L;

  const auto N = static_cast<std::uint64_t>(std::floor(x));
  if (N >= 2) {
    const auto table = coeffs::build_table(model, coeffs::Kind::vonmangoldt, N);
    Complex acc{};
    for (std::uint64_t n = 2; n <= N; ++n) {
      if (table.values[n] == Complex{}) continue;
      const double ln = std::log(static_cast<double>(n));
      acc += table.values[n] * poitou_psi(ln / L) / std::sqrt(static_cast<double>(n));
    }
    rep.prime_term = -2.0 * acc.real() / L;
  }

  if (model.is_zeta()) rep.pole_term = 2.0 * poitou_transform(Complex{L / 2.0, 0.0}).real();

  // Gamma factors: (1/2pi) sum_j int Re digamma((1/2 + kappa_j + ir)/2) Psi(irL) dr.
  {
    double R = 50.0;
    const double C = C4 * model.m / kPi;
    while (r_tail(R, L, C) > 1e-7) R *= 1.5;
    rep.gamma_tail = r_tail(R, L, C);
    const double width = std::min(2.0, 8.0 / L);
    const int panels = static_cast<int>(std::ceil(R / width));
    const double h = R / panels;
    auto integrand = [&](double r) {
      double g = 0.0;
      for (const Complex& k : model.kappas) {
        // Both signs of r at once; Re digamma(conj w) = Re digamma(w).
        g += special::digamma((0.5 + k + Complex{0.0, r}) / 2.0).real();
        g += special::digamma((0.5 + k - Complex{0.0, r}) / 2.0).real();
      }
      return g * psi_hat_imag_axis(r * L);
    };
    double acc = 0.0;
    for (int i = 0; i < panels; ++i) acc += Gauss::integrate(integrand, i * h, (i + 1) * h);
    rep.gamma_term = acc / (2.0 * kPi);
  }

  rep.arithmetic_side = rep.conductor_term + rep.prime_term + rep.gamma_term + rep.pole_term;
  rep.residual = std::abs(rep.zero_side - rep.arithmetic_side);
  return rep;
}

CentralOrderReport central_order_check(const ZeroDataset& zeros, double x) {
  if (!(x > 1.0) || std::log(x) < 1e-2) throw ValidationError("central order check needs log x >= 1e-2");
  const double L = std::log(x);
  CentralOrderReport rep;
  for (const Complex& rho : zeros.zeros_up_to(zeros.T_max)) {
    if (std::abs(rho.real() - 0.5) >= 1.0 / L) continue;
    rep.near_sum += poitou_transform((rho - 0.5) * L).real();
    if (rho == Complex{0.5, 0.0}) ++rep.central_order;
  }
  rep.lower_bound = rep.central_order * poitou_transform(Complex{}).real();
  return rep;
}

}  // namespace zdk::zerostats
