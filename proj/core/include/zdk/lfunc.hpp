#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zdk/coeffs.hpp"
#include "zdk/model.hpp"

namespace zdk::lfunc {

/// Upper bound for sum_{n > N} tau_m(n) n^{theta - sigma} (integral comparison with
/// D_m(x) <= x (1 + log x)^{m-1}). Requires sigma > 1 + theta.
double series_tail_bound(int m, double theta, double sigma, std::uint64_t N);

/// sum_{n <= N} lambda(n) n^{-s}. Throws RegionError unless the rigorous tail bound
/// is below tail_tolerance.
Complex evaluate_series(const LFunctionModel& model, Complex s, std::uint64_t N, double tail_tolerance = 1e-10);
/// Same sum from a prebuilt lambda table (no region check).
Complex evaluate_series(const coeffs::CoefficientTable& lambda, Complex s);

/// prod_{p <= P} L_p(s): 1/prod(1 - alpha_j p^{-s}) or the explicit ramified series.
Complex euler_product(const LFunctionModel& model, Complex s, std::uint64_t P);

/// q^{-s} sum_a chi(a) zeta(s, a/q); entire for nonprincipal chi.
/// Throws PrincipalCharacter for a principal chi.
Complex dirichlet_L(const DirichletCharacter& chi, Complex s);

/// L(s) by the best available route: analytic continuation for degree-one models,
/// otherwise the Dirichlet series (Re s > 1 only, RegionError outside).
Complex evaluate(const LFunctionModel& model, Complex s);

/// log of q^{s/2} prod_j pi^{-(s+kappa_j)/2} Gamma((s+kappa_j)/2), modulo 2 pi i.
Complex log_gamma_factor(const LFunctionModel& model, Complex s);

/// Lambda(s) = q^{s/2} L(s) L(s, pi_inf).
Complex completed(const LFunctionModel& model, Complex s);

/// log Lambda(s) modulo 2 pi i; for zeta, log xi(s) with xi = s(s-1)/2 Lambda(s).
Complex log_completed_entire(const LFunctionModel& model, Complex s);

/// W = Lambda(s0) / conj(Lambda(1 - conj(s0))) at s0 = 3/2.
Complex root_number(const LFunctionModel& model);

struct FunctionalEquationReport {
  double residual = 0.0;
  Complex root_number;
  double modulus_defect = 0.0;  // ||W| - 1|
};

/// |Lambda(s) - W conj(Lambda(1 - conj s))| / max(|Lambda(s)|, 1e-30) for degree-one models.
/// Throws ValidationError if ||W| - 1| > 1e-8.
FunctionalEquationReport functional_equation_residual(const LFunctionModel& model, Complex s);

/// q prod_j (3 + |it + kappa_j|).
double analytic_conductor(const LFunctionModel& model, double t);

struct MollifierTruncation {
  double X = 1.0;
  coeffs::CoefficientTable mu;
};

MollifierTruncation make_mollifier(const LFunctionModel& model, double X);

/// M_X(s) = sum_{n <= X} mu(n) n^{-s}.
Complex mollifier_eval(const MollifierTruncation& moll, Complex s);

/// (T / pi) log(q (T / 2 pi e)^m).
double rvm_estimate(std::uint64_t q, int m, double T);
double rvm_estimate(const LFunctionModel& model, double T);

/// Upper end q^{(1 - eps)/m}, eps = 1/(2 m^2), of the height range where the
/// detector bound is meaningful.
double t_range_limit(std::uint64_t q, int m);

}  // namespace zdk::lfunc
