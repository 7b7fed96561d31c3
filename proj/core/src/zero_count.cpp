#include <algorithm>
#include <cmath>
#include <numbers>

#include "zdk/errors.hpp"
#include "zdk/lfunc.hpp"
#include "zdk/zeros.hpp"

namespace zdk::lfunc {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double x) { return std::remainder(x, 2.0 * kPi); }

struct NearZeroOnContour {};

// Argument change of f along the segment a -> b, refining until every wrapped
// increment is below pi/4.
template <class F>
double arg_change(const F& logf, Complex a, Complex b, Complex la, Complex lb, int depth) {
  const double d = wrap(lb.imag() - la.imag());
  if (std::abs(d) <= kPi / 4.0) return d;
  if (depth > 40 || std::abs(b - a) < 1e-6) throw NearZeroOnContour{};
  const Complex mid = 0.5 * (a + b);
  const Complex lm = logf(mid);
  return arg_change(logf, a, mid, la, lm, depth + 1) + arg_change(logf, mid, b, lm, lb, depth + 1);
}

template <class F>
double arg_along(const F& logf, Complex a, Complex b, double step) {
  const int n = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / step)));
  double total = 0.0;
  Complex prev = a;
  Complex lprev = logf(a);
  for (int i = 1; i <= n; ++i) {
    const Complex cur = a + (b - a) * (static_cast<double>(i) / n);
    const Complex lcur = logf(cur);
    total += arg_change(logf, prev, cur, lprev, lcur, 0);
    prev = cur;
    lprev = lcur;
  }
  return total;
}

}  // namespace

bool zeros_symmetric(const LFunctionModel& model) { return !model.character || model.character->is_real(); }

double hardy_z(const LFunctionModel& model, double t) {
  const Complex s{0.5, t};
  const Complex w = root_number(model);
  const double phase = log_gamma_factor(model, s).imag();
  const Complex z = std::polar(1.0, phase) / std::sqrt(w) * evaluate(model, s);
  return z.real();
}

int count_zeros_rectangle(const LFunctionModel& model, double sigma, double T) {
  if (model.continuation != Continuation::degree_one || model.m != 1 || !(model.entire || model.is_zeta()))
    throw ValidationError("zero counting needs an entire degree-one model (or zeta)");
  if (!(T > 0.0)) throw ValidationError("T must be positive");
  if (sigma > 1.0) return 0;
  const double left = sigma <= 0.0 ? -0.05 : sigma;
  constexpr double right = 1.5;
  auto logf = [&](Complex s) {
    const Complex v = log_completed_entire(model, s);
    if (!std::isfinite(v.real())) throw NearZeroOnContour{};
    return v;
  };
  double t = T;
  for (int attempt = 0; attempt < 5; ++attempt, t += 1e-4) {
    try {
      const double step = 0.1;
      double total = 0.0;
      total += arg_along(logf, Complex{right, -t}, Complex{right, t}, step);
      total += arg_along(logf, Complex{right, t}, Complex{left, t}, step);
      total += arg_along(logf, Complex{left, t}, Complex{left, -t}, step);
      total += arg_along(logf, Complex{left, -t}, Complex{right, -t}, step);
      const double winding = total / (2.0 * kPi);
      const double rounded = std::round(winding);
      if (std::abs(winding - rounded) > 0.05) continue;
      return static_cast<int>(rounded);
    } catch (const NearZeroOnContour&) {
      continue;
    }
  }
  throw BoundaryZero("zero on the counting contour after 5 perturbations of T");
}

std::vector<double> critical_line_zeros(const LFunctionModel& model, double T, const ZeroSearchOptions& opts) {
  if (!(T > 0.0)) throw ValidationError("T must be positive");
  if (!(opts.step > 0.0)) throw ValidationError("scan step must be positive");
  const bool symmetric = zeros_symmetric(model);
  const double lo = symmetric ? 0.0 : -T;
  const Complex w = root_number(model);
  const Complex inv_sqrt_w = 1.0 / std::sqrt(w);
  auto z = [&](double t) {
    const Complex s{0.5, t};
    return (std::polar(1.0, log_gamma_factor(model, s).imag()) * inv_sqrt_w * evaluate(model, s)).real();
  };
  int expected = -1;
  if (opts.verify_count) {
    const int total = count_zeros_rectangle(model, 0.0, T);
    expected = symmetric ? total / 2 : total;
  }
  double step = opts.step;
  for (int round = 0; round <= opts.max_refinements; ++round, step /= 2.0) {
    std::vector<double> zeros;
    const int n = static_cast<int>(std::ceil((T - lo) / step));
    double t_prev = lo + (symmetric ? 1e-9 : 0.0);
    double z_prev = z(t_prev);
    for (int i = 1; i <= n; ++i) {
      const double t_cur = std::min(T, lo + i * step);
      const double z_cur = z(t_cur);
      if (z_cur == 0.0) {
        zeros.push_back(t_cur);
      } else if ((z_prev < 0.0) != (z_cur < 0.0) && z_prev != 0.0) {
        double a = t_prev, b = t_cur, za = z_prev;
        while (b - a > opts.tolerance) {
          const double mid = 0.5 * (a + b);
          const double zm = z(mid);
          if ((zm < 0.0) == (za < 0.0)) {
            a = mid;
            za = zm;
          } else {
            b = mid;
          }
        }
        zeros.push_back(0.5 * (a + b));
      }
      t_prev = t_cur;
      z_prev = z_cur;
    }
    if (expected < 0 || static_cast<int>(zeros.size()) == expected) return zeros;
  }
  throw ValidationError("sign changes do not account for all zeros up to T (possible off-line or multiple zero)");
}

}  // namespace zdk::lfunc
