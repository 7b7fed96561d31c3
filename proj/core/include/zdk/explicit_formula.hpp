#pragma once

#include <complex>

#include "zdk/model.hpp"
#include "zdk/zerostats.hpp"

namespace zdk::zerostats {

struct ExplicitFormulaReport {
  double x = 0.0;
  Complex zero_side;          // sum_rho Psi((rho - 1/2) log x)
  double conductor_term = 0.0;  // log(q / pi^m) / log x
  double prime_term = 0.0;      // -(2 / log x) Re sum a(n) Lambda(n) n^{-1/2} psi(log n / log x)
  double gamma_term = 0.0;      // (1/2pi) sum_j int Re digamma((1/2 + kappa_j + ir)/2) Psi(i r log x) dr
  double arithmetic_side = 0.0;
  double residual = 0.0;        // |zero_side - arithmetic_side|
  double tail_bound = 0.0;      // envelope bound for zeros beyond the dataset height
  double gamma_tail = 0.0;      // neglected part of the r-integral
  double pole_term = 0.0;       // 2 Psi(log x / 2) for zeta, else 0
};

/// Balance of the explicit formula with the Poitou test function at scale x.
/// Throws ValidationError if log x < 1e-2, IncompleteDataset if the tail bound over
/// zeros above T_max exceeds 1e-5.
ExplicitFormulaReport explicit_formula_balance(const LFunctionModel& model, const ZeroDataset& zeros, double x);

struct CentralOrderReport {
  double near_sum = 0.0;    // sum over |beta - 1/2| < 1/log x of Re Psi((rho - 1/2) log x)
  int central_order = 0;    // multiplicity of rho = 1/2 in the dataset
  double lower_bound = 0.0; // central_order * Psi(0)
};

/// Sum of Re Psi over zeros near the central point, checked against ord * Psi(0).
CentralOrderReport central_order_check(const ZeroDataset& zeros, double x);

}  // namespace zdk::zerostats
