#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zdk/symfunc.hpp"

namespace zdk::sievesim {

using Complex = std::complex<double>;
using symfunc::ExponentTuple;
using symfunc::Partition;
using symfunc::SatakeVector;

enum class Distribution { haar_su_m, all_ones, adversarial_aligned };

std::string to_string(Distribution d);
Distribution distribution_from_string(const std::string& s);

struct EnsembleSpec {
  int m = 3;
  std::size_t count = 100000;
  std::uint64_t seed = 1;
  Distribution distribution = Distribution::haar_su_m;
  /// Threads; 0 picks hardware concurrency. Results do not depend on it.
  unsigned workers = 1;

  void validate() const;
};

/// Samples are generated in fixed chunks of this size, chunk c from substream c.
inline constexpr std::size_t kChunk = 2048;

/// Eigenvalues of a Haar-random U(m) matrix (QR of a complex Ginibre matrix with the
/// phases of diag R removed), divided by an m-th root of the determinant and rotated by
/// an independent uniform m-th root of unity.
std::vector<SatakeVector> sample_haar_satake(const EnsembleSpec& spec);

struct Estimate {
  Complex estimate;
  double stderr_ = 0.0;  // sqrt(sum |X - mean|^2 / (N (N - 1)))
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// E[s_lambda(alpha) conj(s_mu(alpha))] over the ensemble. SizeLimit if either |.| > 8.
Estimate schur_orthogonality_mc(const EnsembleSpec& spec, const Partition& lambda, const Partition& mu);

struct GramReport {
  std::vector<Partition> partitions;        // all with |lambda| <= max_size, length <= m
  std::vector<std::vector<Estimate>> gram;  // gram[i][j] = E[s_i conj s_j]
  double worst_z = 0.0;    // max |gram - expected| / stderr over entries with stderr > 0
  bool identity_within_3sigma = false;
};

/// Gram matrix of Schur polynomials; expected value 1 when the partitions agree after
/// removing full columns of height m, else 0.
GramReport schur_gram(const EnsembleSpec& spec, int max_size);

/// sum beta(n) B(n) over integer tuples n = (n_{m-1}, ..., n_1) with weight
/// n_1 n_2^2 ... n_{m-1}^{m-1} <= x.
struct LinearForm {
  int m = 3;
  double x = 0.0;
  std::vector<std::pair<std::vector<std::uint64_t>, Complex>> terms;

  /// Weight of a tuple given as (n_{m-1}, ..., n_1).
  static std::uint64_t weight(const std::vector<std::uint64_t>& n);
  /// Throws ValidationError for malformed tuples, weights above x or repeated tuples;
  /// EmptySupport when there are no terms.
  void validate() const;
  double beta_norm2() const;
};

/// All tuples (n_{m-1}, ..., n_1) of positive integers with weight <= x, sorted.
std::vector<std::vector<std::uint64_t>> tuples_up_to(int m, double x);

struct RatioReport {
  double ratio = 0.0;     // mean |sum beta B|^2 / sum |beta|^2
  double stderr_ = 0.0;
  std::size_t samples = 0;
  std::size_t support = 0;
  std::uint64_t seed = 0;
};

/// Each sample draws one Satake vector per prime dividing the support, independently,
/// and B(n) = prod_p B(p^{v_p(n_{m-1})}, ..., p^{v_p(n_1)}).
RatioReport large_sieve_ratio(const EnsembleSpec& spec, const LinearForm& form);

struct PairEstimate {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  Complex estimate;
  double stderr_ = 0.0;
  bool shared = false;  // a, b have the same m-power-free part
};

struct MuCorrelationReport {
  std::vector<PairEstimate> pairs;
  std::size_t shared_pairs = 0;
  std::size_t generic_pairs = 0;
  double min_shared_z = 0.0;   // min |estimate| / stderr over shared pairs (inf when stderr = 0)
  double max_generic_z = 0.0;  // max |estimate| / stderr over generic pairs with stderr > 0
  std::size_t generic_exceedances = 0;  // generic pairs beyond 3 sigma
  /// Exceedances tolerated among the generic pairs: the 99.9% binomial quantile at the
  /// two-sided 3 sigma rate, since hundreds of pairs are tested at once.
  std::size_t allowed_exceedances = 0;
  bool structure_ok = false;   // every shared pair beyond 3 sigma, generic exceedances within allowance
};

/// m-power-free part of n in the sense used for the mu expansion: exponents reduced mod m.
std::uint64_t mpower_free_part(std::uint64_t n, int m);

/// E[mu(a) conj(mu(b))] with mu(p^k) = (-1)^k e_k(alpha_p). All pairs a <= b <= min(x, 100)
/// plus every pair up to x with a shared m-power-free part. Requires x <= 1e4.
MuCorrelationReport mu_power_correlation(const EnsembleSpec& spec, std::uint64_t x);

/// q^{m-1} prod_{p | q} (1 + 1/p + ... + 1/p^{m-1}). Throws RangeError on overflow.
std::uint64_t index_V(int m, std::uint64_t q);

struct FamilyFactor {
  double F = 0.0;           // prod_{p | q} (1 + p^{-(1/2 - theta)})^m
  double F_logsum = 0.0;    // same value through exp(sum log)
  double two_omega = 0.0;   // 2^{omega(q)}
  double two_m_omega = 0.0; // 2^{m omega(q)}
  double ratio = 0.0;       // F / 2^{omega(q)}
  bool within_two_m_omega = false;
};

FamilyFactor family_factor_F(int m, std::uint64_t q, double theta);

}  // namespace zdk::sievesim
