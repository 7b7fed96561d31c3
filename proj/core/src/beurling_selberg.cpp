#include "zdk/beurling_selberg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zdk/errors.hpp"

namespace zdk::zerostats {

namespace {

constexpr double kPi = std::numbers::pi;

Complex e(double x) { return std::polar(1.0, 2.0 * kPi * x); }

double indicator(const Interval& I, double x) { return I.contains(x) ? 1.0 : 0.0; }

}  // namespace

Interval::Interval(double u_, double v_) : u(u_), v(v_) {
  if (!(0.0 <= u && u <= v && v <= 1.0)) throw ValidationError("interval must satisfy 0 <= u <= v <= 1");
}

Complex Interval::fourier(int n) const {
  if (n == 0) return length();
  return (e(-n * u) - e(-n * v)) / Complex{0.0, 2.0 * kPi * n};
}

double TrigPolynomial::operator()(double theta) const {
  // Real by construction; sum the conjugate pairs.
  double acc = a(0).real();
  for (int n = 1; n <= M; ++n) acc += 2.0 * (a(n) * e(n * theta)).real();
  return acc;
}

double vaaler_sawtooth(double x, int M) {
  const double J = M + 1.0;
  double acc = 0.0;
  for (int m = 1; m <= M; ++m) {
    const double u = m / J;
    const double f = -(1.0 - u) / std::tan(kPi * u) - 1.0 / kPi;
    acc += f * std::sin(2.0 * kPi * m * x);
  }
  return acc / J;
}

double fejer_kernel(double x, int M) {
  double acc = 1.0;
  for (int m = 1; m <= M; ++m) acc += 2.0 * (1.0 - m / (M + 1.0)) * std::cos(2.0 * kPi * m * x);
  return acc;
}

std::pair<TrigPolynomial, TrigPolynomial> beurling_selberg(const Interval& I, int M) {
  if (M < 1) throw ValidationError("Beurling-Selberg degree M must be >= 1");
  // 1_I(x) = |I| + saw(u - x) - saw(v - x) almost everywhere; Vaaler's error bound
  // |saw - V| <= fejer / (2M + 2) turns this into a sandwich.
  auto S = [&](double x, double sign) {
    return I.length() + vaaler_sawtooth(I.u - x, M) - vaaler_sawtooth(I.v - x, M) +
           sign * (fejer_kernel(I.u - x, M) + fejer_kernel(I.v - x, M)) / (2.0 * M + 2.0);
  };
  const int K = 2 * M + 2;
  std::vector<double> plus_s(static_cast<std::size_t>(K)), minus_s(static_cast<std::size_t>(K));
  for (int j = 0; j < K; ++j) {
    plus_s[static_cast<std::size_t>(j)] = S(static_cast<double>(j) / K, 1.0);
    minus_s[static_cast<std::size_t>(j)] = S(static_cast<double>(j) / K, -1.0);
  }
  auto read = [&](const std::vector<double>& samples, PolyKind kind) {
    TrigPolynomial p;
    p.M = M;
    p.kind = kind;
    p.interval = I;
    p.coeffs.resize(static_cast<std::size_t>(2 * M + 1));
    for (int n = -M; n <= M; ++n) {
      Complex acc{};
      for (int j = 0; j < K; ++j) acc += samples[static_cast<std::size_t>(j)] * e(-static_cast<double>(n) * j / K);
      p.coeffs[static_cast<std::size_t>(n + M)] = acc / static_cast<double>(K);
    }
    return p;
  };
  return {read(plus_s, PolyKind::majorant), read(minus_s, PolyKind::minorant)};
}

SandwichReport check_beurling_selberg(const TrigPolynomial& plus, const TrigPolynomial& minus, int grid) {
  SandwichReport rep;
  const Interval& I = plus.interval;
  for (int j = 0; j < grid; ++j) {
    const double x = static_cast<double>(j) / grid;
    const double ind = indicator(I, x);
    // Minorant is compared with the open interval, majorant with the closed one.
    const double open = (I.u < x && x < I.v) ? 1.0 : 0.0;
    rep.max_violation = std::max(rep.max_violation, ind - plus(x));
    rep.max_violation = std::max(rep.max_violation, minus(x) - open);
  }
  for (const TrigPolynomial* p : {&plus, &minus}) {
    for (int n = -p->M; n <= p->M; ++n) {
      rep.max_coeff_excess =
          std::max(rep.max_coeff_excess, std::abs(p->a(n) - I.fourier(n)) - 1.0 / (p->M + 1.0));
      if (std::abs((p->a(n) - std::conj(p->a(-n)))) > 1e-12) rep.hermitian = false;
    }
  }
  return rep;
}

}  // namespace zdk::zerostats
