#include "zdk/poitou.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "zdk/errors.hpp"

namespace zdk::zerostats {

namespace {

constexpr double kPi = std::numbers::pi;
using Gauss = boost::math::quadrature::gauss<double, 20>;

// int_a^b f over `panels` equal pieces.
template <class F>
Complex composite(const F& f, double a, double b, int panels) {
  Complex acc{};
  const double h = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * h;
    acc += Gauss::integrate([&](double t) { return f(t); }, lo, lo + h);
  }
  return acc;
}

}  // namespace

double poitou_psi(double t) {
  const double a = std::abs(t);
  if (a >= 1.0) return 0.0;
  // Autocorrelation of cos(pi t) on [-1/2, 1/2], damped by sech so that psi(t) cosh(x t)
  // stays positive definite for every |x| <= 1.
  return ((1.0 - a) * std::cos(kPi * a) + std::sin(kPi * a) / kPi) / std::cosh(t);
}

Complex poitou_transform(Complex z) {
  // ~8 radians of oscillation per 20-point panel; psi has a kink at 0 so split there.
  const int panels = 2 + static_cast<int>(std::ceil(std::abs(z.imag()) / 8.0));
  auto f = [&](double t) { return poitou_psi(t) * std::exp(-t * z); };
  return composite(f, -1.0, 0.0, panels) + composite(f, 0.0, 1.0, panels);
}

PoitouReport validate_poitou() {
  PoitouReport rep;
  rep.psi_at_zero = poitou_psi(0.0);
  rep.min_psi = INFINITY;
  for (int i = 0; i <= 2000; ++i) {
    const double t = -1.0 + i / 1000.0;
    rep.min_psi = std::min(rep.min_psi, poitou_psi(t));
    rep.even_defect = std::max(rep.even_defect, std::abs(poitou_psi(t) - poitou_psi(-t)));
  }
  if (rep.min_psi < 0.0) throw PositivityViolation("psi takes the negative value " + std::to_string(rep.min_psi));

  rep.min_re_transform = INFINITY;
  for (int i = 0; i <= 10; ++i) {
    const double re = -1.0 + 0.2 * i;
    for (int j = 0; j <= 100; ++j) {
      const Complex z{re, -50.0 + j};
      const Complex v = poitou_transform(z);
      rep.min_re_transform = std::min(rep.min_re_transform, v.real());
      rep.decay_constant =
          std::max(rep.decay_constant, std::abs(v) * std::pow(1.0 + std::abs(z), 3) * std::exp(-std::abs(re)));
    }
  }
  if (rep.min_re_transform < -1e-10)
    throw PositivityViolation("Re Psi reaches " + std::to_string(rep.min_re_transform) + " in the strip");
  rep.envelope_k4 = poitou_envelope_k4();
  return rep;
}

namespace {

// |Psi(iy)| on y = 0, 0.1, ..., 1000.
const std::vector<double>& imag_axis_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(10001);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = std::abs(poitou_transform(Complex{0.0, 0.1 * static_cast<double>(i)}));
    return t;
  }();
  return table;
}

}  // namespace

double poitou_envelope_k4() {
  static const double value = [] {
    const auto& t = imag_axis_table();
    double c = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) c = std::max(c, t[i] * std::pow(1.0 + 0.1 * static_cast<double>(i), 4));
    // Grid maximum plus headroom for peaks between grid points.
    return 1.1 * c;
  }();
  return value;
}

double poitou_envelope_k4_beyond(double y0) {
  y0 = std::max(y0, 1.0);
  double c = 0.0;
  if (y0 < 900.0) {
    const auto& t = imag_axis_table();
    for (auto i = static_cast<std::size_t>(std::floor(y0 * 10.0)); i < t.size(); ++i)
      c = std::max(c, t[i] * std::pow(0.1 * static_cast<double>(i), 4));
  } else {
    for (int i = 0; i <= 2000; ++i) {
      const double y = y0 + 0.1 * i;
      c = std::max(c, std::abs(poitou_transform(Complex{0.0, y})) * std::pow(y, 4));
    }
  }
  return 1.1 * c;
}

}  // namespace zdk::zerostats
