#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using C = std::complex<double>;

// h_k(x_1..x_m) by peeling off the last variable.
inline C complete_homogeneous(const std::vector<C>& x, int k) {
  if (k < 0) return 0.0;
  if (k == 0) return 1.0;
  std::vector<C> h(static_cast<std::size_t>(k) + 1, 0.0);
  h[0] = 1.0;
  for (const C& a : x)
    for (int j = 1; j <= k; ++j) h[static_cast<std::size_t>(j)] += a * h[static_cast<std::size_t>(j - 1)];
  return h[static_cast<std::size_t>(k)];
}

inline C det(std::vector<std::vector<C>> a) {
  const std::size_t n = a.size();
  C d = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) == 0.0) return 0.0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const C f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

// Jacobi-Trudi with h_k computed directly from the variables.
inline C schur(const std::vector<C>& x, const std::vector<int>& lambda) {
  const std::size_t n = lambda.size();
  if (n == 0) return 1.0;
  std::vector<std::vector<C>> a(n, std::vector<C>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = complete_homogeneous(x, lambda[i] - static_cast<int>(i) + static_cast<int>(j));
  return det(a);
}

inline std::vector<C> random_det_one(int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  std::vector<C> a(static_cast<std::size_t>(m));
  double s = 0.0;
  for (int j = 0; j + 1 < m; ++j) {
    const double t = u(rng);
    s += t;
    a[static_cast<std::size_t>(j)] = std::polar(1.0, t);
  }
  a.back() = std::polar(1.0, -s);
  return a;
}

inline int mobius(std::uint64_t n) {
  int s = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    s = -s;
  }
  return n > 1 ? -s : s;
}

// tau_m by summing tau_{m-1} over divisors.
inline std::uint64_t tau(int m, std::uint64_t n) {
  if (m == 1) return 1;
  std::uint64_t t = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) t += tau(m - 1, n / d);
  return t;
}

// sup over all anchored intervals, checking both sides of every point.
inline double star_discrepancy_brute(const std::vector<double>& pts) {
  const double N = static_cast<double>(pts.size());
  std::vector<double> ends(pts);
  ends.push_back(1.0);
  double worst = 0.0;
  for (const double t : ends) {
    double open = 0.0, closed = 0.0;
    for (const double x : pts) {
      if (x < t) open += 1.0;
      if (x <= t) closed += 1.0;
    }
    worst = std::max({worst, std::abs(open / N - t), std::abs(closed / N - t)});
  }
  return worst;
}

// Simpson's rule on [a, b] with n (even) panels.
template <class F>
double simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace oracle
