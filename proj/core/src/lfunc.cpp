#include "zdk/lfunc.hpp"

#include <cmath>
#include <numbers>

#include "zdk/arith.hpp"
#include "zdk/errors.hpp"
#include "zdk/special.hpp"

namespace zdk::lfunc {

namespace {

constexpr double kPi = std::numbers::pi;

Complex npow(double logn, Complex s) { return std::exp(-s * logn); }

void require_degree_one(const LFunctionModel& model, const char* op) {
  if (model.continuation != Continuation::degree_one || model.m != 1)
    throw ValidationError(std::string(op) + " needs a degree-one model with analytic continuation");
}

}  // namespace

double series_tail_bound(int m, double theta, double sigma, std::uint64_t N) {
  const double a = sigma - theta;
  if (a <= 1.0) return std::numeric_limits<double>::infinity();
  const double L = std::log(static_cast<double>(N));
  if (m == 1) return std::exp((1.0 - a) * L) / (a - 1.0);
  // sum_{n>N} tau_m(n) n^{-a} <= a int_N^inf D(x) x^{-a-1} dx with D(x) <= x (1 + log x)^{m-1};
  // int_L^inf (1+u)^k e^{-(a-1)u} du = e^{-(a-1)L} sum_j k!/(k-j)! (1+L)^{k-j} / (a-1)^{j+1}.
  const int k = m - 1;
  double sum = 0.0, falling = 1.0;
  for (int j = 0; j <= k; ++j) {
    sum += falling * std::pow(1.0 + L, k - j) / std::pow(a - 1.0, j + 1);
    falling *= (k - j);
  }
  return a * std::exp(-(a - 1.0) * L) * sum;
}

Complex evaluate_series(const LFunctionModel& model, Complex s, std::uint64_t N, double tail_tolerance) {
  const double bound = series_tail_bound(model.m, model.theta, s.real(), N);
  if (!(bound < tail_tolerance))
    throw RegionError("series tail bound " + std::to_string(bound) + " exceeds tolerance at Re(s) = " +
                      std::to_string(s.real()));
  return evaluate_series(coeffs::build_table(model, coeffs::Kind::lambda, N), s);
}

Complex evaluate_series(const coeffs::CoefficientTable& lambda, Complex s) {
  // Summed from the tail end so small terms accumulate first.
  Complex acc{};
  for (std::uint64_t n = lambda.N; n >= 1; --n)
    if (lambda.values[n] != Complex{}) acc += lambda.values[n] * npow(std::log(static_cast<double>(n)), s);
  return acc;
}

Complex euler_product(const LFunctionModel& model, Complex s, std::uint64_t P) {
  Complex prod{1.0, 0.0};
  for (auto p : primes_up_to(P)) {
    const auto f = model.local(p);
    const Complex x = npow(std::log(static_cast<double>(p)), s);
    if (f.sv) {
      Complex d{1.0, 0.0};
      for (const auto& a : f.sv->alphas()) d *= 1.0 - a * x;
      prod /= d;
    } else {
      Complex loc{1.0, 0.0}, xk{1.0, 0.0};
      for (const auto& c : f.ramified_coeffs) {
        xk *= x;
        loc += c * xk;
      }
      prod *= loc;
    }
  }
  return prod;
}

Complex dirichlet_L(const DirichletCharacter& chi, Complex s) {
  if (chi.is_principal()) throw PrincipalCharacter("dirichlet_L needs a nonprincipal character");
  const double q = static_cast<double>(chi.modulus());
  auto direct = [&](Complex z) {
    Complex acc{};
    for (std::uint64_t a = 1; a <= chi.modulus(); ++a) {
      const Complex c = chi(static_cast<std::int64_t>(a));
      if (c == Complex{}) continue;
      acc += c * special::hurwitz_zeta(z, static_cast<double>(a) / q);
    }
    return std::exp(-z * std::log(q)) * acc;
  };
  // Each Hurwitz term has a pole at s = 1 that cancels in the character sum; near it,
  // use the mean value over a circle (exact for the entire function L).
  if (std::abs(s - 1.0) < 1e-2) {
    constexpr int K = 32;
    constexpr double r = 0.25;
    Complex acc{};
    for (int k = 0; k < K; ++k) acc += direct(s + std::polar(r, 2.0 * kPi * (k + 0.5) / K));
    return acc / static_cast<double>(K);
  }
  return direct(s);
}

Complex evaluate(const LFunctionModel& model, Complex s) {
  if (model.continuation == Continuation::degree_one) {
    if (model.character) return dirichlet_L(*model.character, s);
    if (model.is_zeta()) return special::riemann_zeta(s);
  }
  if (s.real() <= 1.0 + model.theta) throw RegionError("no analytic continuation for this model at Re(s) <= 1");
  for (std::uint64_t N = 1024; N <= 10'000'000; N *= 2)
    if (series_tail_bound(model.m, model.theta, s.real(), N) < 1e-10) return evaluate_series(model, s, N);
  throw RegionError("Dirichlet series converges too slowly at Re(s) = " + std::to_string(s.real()));
}

Complex log_gamma_factor(const LFunctionModel& model, Complex s) {
  Complex acc = 0.5 * s * std::log(static_cast<double>(model.q));
  for (const auto& k : model.kappas) {
    const Complex z = 0.5 * (s + k);
    acc += -z * std::log(kPi) + special::log_gamma(z);
  }
  return acc;
}

Complex completed(const LFunctionModel& model, Complex s) {
  return std::exp(log_gamma_factor(model, s)) * evaluate(model, s);
}

Complex log_completed_entire(const LFunctionModel& model, Complex s) {
  require_degree_one(model, "log_completed_entire");
  Complex acc = log_gamma_factor(model, s) + std::log(evaluate(model, s));
  if (model.is_zeta()) acc += std::log(0.5 * s * (s - 1.0));
  return acc;
}

Complex root_number(const LFunctionModel& model) {
  require_degree_one(model, "root_number");
  const Complex s0{1.5, 0.0};
  const Complex num = log_gamma_factor(model, s0) + std::log(evaluate(model, s0));
  const Complex s1 = 1.0 - std::conj(s0);
  const Complex den = log_gamma_factor(model, s1) + std::log(evaluate(model, s1));
  return std::exp(num - std::conj(den));
}

FunctionalEquationReport functional_equation_residual(const LFunctionModel& model, Complex s) {
  require_degree_one(model, "functional_equation_residual");
  FunctionalEquationReport r;
  r.root_number = root_number(model);
  r.modulus_defect = std::abs(std::abs(r.root_number) - 1.0);
  if (r.modulus_defect > 1e-8) throw ValidationError("root number is not of modulus one");
  const Complex lhs = completed(model, s);
  const Complex rhs = r.root_number * std::conj(completed(model, 1.0 - std::conj(s)));
  r.residual = std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30);
  return r;
}

double analytic_conductor(const LFunctionModel& model, double t) {
  double c = static_cast<double>(model.q);
  for (const auto& k : model.kappas) c *= 3.0 + std::abs(Complex{0.0, t} + k);
  return c;
}

MollifierTruncation make_mollifier(const LFunctionModel& model, double X) {
  if (!(X >= 1.0)) throw ValidationError("mollifier length X must be >= 1");
  MollifierTruncation mt;
  mt.X = X;
  mt.mu = coeffs::build_table(model, coeffs::Kind::mu, static_cast<std::uint64_t>(std::floor(X)));
  return mt;
}

Complex mollifier_eval(const MollifierTruncation& moll, Complex s) {
  const auto n_max = static_cast<std::uint64_t>(std::floor(moll.X));
  if (moll.mu.N < n_max) throw ValidationError("mollifier table shorter than X");
  Complex acc{};
  for (std::uint64_t n = n_max; n >= 1; --n)
    if (moll.mu.values[n] != Complex{}) acc += moll.mu.values[n] * npow(std::log(static_cast<double>(n)), s);
  return acc;
}

double rvm_estimate(std::uint64_t q, int m, double T) {
  if (T < 2.0) throw ValidationError("rvm_estimate needs T >= 2");
  return T / kPi * std::log(static_cast<double>(q) * std::pow(T / (2.0 * kPi * std::numbers::e), m));
}

double rvm_estimate(const LFunctionModel& model, double T) { return rvm_estimate(model.q, model.m, T); }

double t_range_limit(std::uint64_t q, int m) {
  const double eps = 1.0 / (2.0 * m * m);
  return std::pow(static_cast<double>(q), (1.0 - eps) / m);
}

}  // namespace zdk::lfunc
