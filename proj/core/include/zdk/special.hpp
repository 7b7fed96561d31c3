#pragma once

#include <complex>

namespace zdk::special {

using Complex = std::complex<double>;

/// log Gamma(z) (Lanczos, g = 607/128, 15 terms; reflection for Re z < 1/2).
/// The imaginary part is correct modulo 2 pi, which is all exponentiation and
/// wrapped argument tracking need.
Complex log_gamma(Complex z);
Complex gamma(Complex z);

/// Gamma'/Gamma by upward recurrence and the Bernoulli asymptotic series.
Complex digamma(Complex z);

/// Hurwitz zeta(s, a) for a in (0, 1] by Euler-Maclaurin summation with
/// N = 20 + ceil(0.4 |s|) leading terms and 20 Bernoulli corrections.
/// Throws PoleAtOne at s = 1.
Complex hurwitz_zeta(Complex s, double a);

/// Riemann zeta(s) = hurwitz_zeta(s, 1).
Complex riemann_zeta(Complex s);

/// log(sin(pi z)) modulo 2 pi i, stable for large |Im z|.
Complex log_sin_pi(Complex z);

}  // namespace zdk::special
