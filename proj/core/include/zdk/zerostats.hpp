#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "zdk/model.hpp"

namespace zdk::zerostats {

enum class Source { ingested, computed };

/// Ordinates of nontrivial zeros, beta = 1/2 unless overridden per zero.
struct ZeroDataset {
  std::string label;
  std::vector<double> ordinates;  // strictly increasing
  std::vector<double> betas;      // empty, or one real part per ordinate
  /// When set, every ordinate g stands for the pair +-g (zeros of a self-dual L).
  bool symmetric = true;
  double T_max = 0.0;
  Source source = Source::ingested;

  void validate() const;
  double beta(std::size_t i) const { return betas.empty() ? 0.5 : betas[i]; }
  /// Zeros beta + i gamma with |gamma| <= T, both signs expanded for symmetric sets.
  std::vector<Complex> zeros_up_to(double T) const;
  /// Number of zeros (both signs) with |gamma| <= T.
  std::size_t count_up_to(double T) const;
};

/// One decimal ordinate per line, ascending. Ordinates above T_max are dropped.
/// Throws ParseError(line) and UnsortedInput; an unreadable file is ParseError at line 0.
ZeroDataset ingest_zeros(std::istream& in, const std::string& label, double T_max, bool symmetric = true);
ZeroDataset ingest_zeros(const std::string& path, const std::string& label, double T_max, bool symmetric = true);

/// Zeros on the critical line up to T found by sign changes of the real completed
/// function and certified against the argument-principle count.
ZeroDataset computed_zeros(const LFunctionModel& model, double T);

void write_zeros(const ZeroDataset& zd, std::ostream& out);

/// x - floor(x), folded into [0, 1).
double frac(double x);

/// D*_N = sup_t |#{x_i < t}/N - t| via the sorted-points formula. Points must lie in [0, 1).
double star_discrepancy(std::vector<double> points);

/// Star discrepancy of {alpha gamma} over zeros with |gamma| <= T. Throws RangeError for
/// T > T_max.
double fujii_statistic(const ZeroDataset& zd, double alpha, double T);

struct LandauGonekResult {
  Complex sum;
  Complex main_term;
  double gap = 0.0;
  long nearest = 0;  // <x>, ties to even
};

/// sum_{|gamma| <= T} x^{rho - 1/2} against -(T/pi) sinc(T log(x/<x>)) Lambda(<x>) a(<x>)/sqrt(x).
/// `a` supplies the coefficient at prime powers (1 for zeta).
LandauGonekResult landau_gonek_sum(const ZeroDataset& zd, double x, double T,
                                   const std::function<Complex(long)>& a = {});

struct FamilyBound {
  double bound = 0.0;     // 2 sup_I max_pm |sum_{n=1}^{M} a_pm(n) E(n)| + 1/M
  double direct = 0.0;    // star discrepancy of the averaged empirical measure
  double worst_single = 0.0;  // max over datasets of their individual bound
};

/// Erdos-Turan type bound for the family average of {alpha gamma}, sup over anchored
/// intervals [0, t] with t on a 1e3-point grid and at all data points.
/// Throws IncompleteDataset if some dataset does not reach T.
FamilyBound family_equidistribution(const std::vector<ZeroDataset>& datasets, double alpha, double T, int M);

/// M = B log T / (6 pi |alpha| log log T), at least 1.
int choose_M(double B, double T, double alpha);

}  // namespace zdk::zerostats
