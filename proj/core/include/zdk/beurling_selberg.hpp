#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace zdk::zerostats {

using Complex = std::complex<double>;

struct Interval {
  double u = 0.0;
  double v = 0.0;

  Interval() = default;
  Interval(double u_, double v_);
  double length() const noexcept { return v - u; }
  bool contains(double x) const noexcept { return u <= x && x <= v; }
  /// int_I e(-n t) dt.
  Complex fourier(int n) const;
};

enum class PolyKind { majorant, minorant };

/// sum_{|n| <= M} a(n) e(n theta).
struct TrigPolynomial {
  int M = 0;
  std::vector<Complex> coeffs;  // a(-M) ... a(M)
  PolyKind kind = PolyKind::majorant;
  Interval interval;

  Complex a(int n) const { return coeffs[static_cast<std::size_t>(n + M)]; }
  double operator()(double theta) const;
};

/// Vaaler approximation to the sawtooth x - floor(x) - 1/2.
double vaaler_sawtooth(double x, int M);
/// Fejer-type kernel sum_{|m| <= M} (1 - |m|/(M+1)) e(m x).
double fejer_kernel(double x, int M);

/// Selberg majorant and minorant of the indicator of I, built from the Vaaler kernel
/// and read back into coefficients with an equispaced DFT on 2M + 2 points.
std::pair<TrigPolynomial, TrigPolynomial> beurling_selberg(const Interval& I, int M);

struct SandwichReport {
  double max_violation = 0.0;      // max over the grid of (S- - 1_I)_+ and (1_I - S+)_+
  double max_coeff_excess = 0.0;   // max |a(n) - fourier(n)| - 1/(M+1), over both polys
  bool hermitian = true;           // a(-n) = conj a(n) within 1e-12
};

/// Checks the sandwich, the coefficient bound and hermitian symmetry on `grid` equispaced points of [0, 1).
SandwichReport check_beurling_selberg(const TrigPolynomial& plus, const TrigPolynomial& minus, int grid = 10000);

}  // namespace zdk::zerostats
