#pragma once

// Schur polynomials evaluated at Satake parameters.
//
// A Fourier coefficient B(p^{a_{m-1}}, ..., p^{a_1}) at an unramified prime is the
// Schur polynomial s_lambda(alpha_1, ..., alpha_m) for the partition
//   lambda = (a_{m-1} + ... + a_1, a_{m-1} + ... + a_2, ..., a_{m-1}).
// Two independent evaluation routes are provided: the bialternant (ratio of
// alternants) and an enumeration of semistandard Young tableaux.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace zdk::symfunc {

using Complex = std::complex<double>;

/// Weakly decreasing nonnegative parts; trailing zeros are stripped on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;  // |lambda|
  bool empty() const noexcept { return parts_.empty(); }
  /// lambda_i (0-based), zero beyond the length.
  int operator[](int i) const noexcept { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  /// lambda + (j, ..., j) with m entries. Requires length() <= m.
  Partition shifted(int j, int m) const;
  /// Removes full columns of height m: the canonical label of the SU(m) representation.
  Partition strip_full_columns(int m) const;

  /// All partitions of n with at most max_parts parts, in reverse lexicographic order.
  static std::vector<Partition> all_of_size(int n, int max_parts);
  /// All partitions with |lambda| <= n and at most max_parts parts.
  static std::vector<Partition> all_up_to(int n, int max_parts);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// The m local parameters alpha_1(p), ..., alpha_m(p).
class SatakeVector {
 public:
  static constexpr double kFlagTolerance = 1e-12;

  explicit SatakeVector(std::vector<Complex> alphas, std::uint64_t prime = 0);

  int m() const noexcept { return static_cast<int>(alphas_.size()); }
  std::span<const Complex> alphas() const noexcept { return alphas_; }
  std::uint64_t prime() const noexcept { return prime_; }
  bool unitary() const noexcept { return unitary_; }
  bool det_one() const noexcept { return det_one_; }
  Complex product() const noexcept;
  double min_separation() const noexcept;
  double max_modulus() const noexcept;

  /// |alpha_j| <= p^theta for all j (up to kFlagTolerance relative slack).
  bool satisfies_ramanujan_bound(double theta) const;

 private:
  std::vector<Complex> alphas_;
  std::uint64_t prime_ = 0;
  bool unitary_ = false;
  bool det_one_ = false;
};

/// Best known exponent toward Ramanujan: theta_m = 1/2 - 1/(m^2 + 1).
double ramanujan_exponent(int m);

/// (a_{m-1}, ..., a_1): the exponents of B(p^{a_{m-1}}, ..., p^{a_1}).
class ExponentTuple {
 public:
  ExponentTuple() = default;
  explicit ExponentTuple(std::vector<int> a);
  ExponentTuple(std::initializer_list<int> a) : ExponentTuple(std::vector<int>(a)) {}

  /// Degree m this tuple indexes (size + 1).
  int degree() const noexcept { return static_cast<int>(a_.size()) + 1; }
  const std::vector<int>& exponents() const noexcept { return a_; }
  /// Exponent a_i for 1 <= i <= m-1.
  int at(int i) const;
  Partition induced_partition() const;
  /// (a_1, ..., a_{m-1}): the contragredient tuple.
  ExponentTuple reversed() const;

  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
  friend auto operator<=>(const ExponentTuple&, const ExponentTuple&) = default;

 private:
  std::vector<int> a_;
};

struct SchurOptions {
  /// Below this pairwise separation the bialternant is abandoned.
  double confluence_threshold = 1e-6;
  bool allow_fallback = true;
};

/// det[alpha_j^{lambda_k + m - k}] / det[alpha_j^{m - k}].
/// Confluent inputs are routed to the tableau enumeration (or, beyond its size
/// guard, to the Jacobi-Trudi determinant) unless fallback is disabled, in which
/// case ConfluentParameters is thrown.
Complex schur_bialternant(const SatakeVector& sv, const Partition& lambda, const SchurOptions& opts = {});

/// Sum over semistandard Young tableaux of shape lambda, entries in {1..m}.
/// Guard: |lambda| <= 12 and m <= 5, otherwise SizeLimit.
Complex schur_tableau_oracle(const SatakeVector& sv, const Partition& lambda);

/// Jacobi-Trudi determinant det[h_{lambda_i - i + j}] with h_k from the
/// elementary symmetric polynomials. Division free, valid for confluent input.
Complex schur_jacobi_trudi(const SatakeVector& sv, const Partition& lambda);

/// e_0, ..., e_m of the Satake parameters by direct expansion of prod(1 + alpha_j x).
std::vector<Complex> elementary_symmetric(std::span<const Complex> alphas);

/// Number of SSYT of shape lambda with entries <= m (= s_lambda(1, ..., 1)).
std::uint64_t count_ssyt(const Partition& lambda, int m);

/// B(p^{a_{m-1}}, ..., p^{a_1}) at this prime. Requires det_one.
Complex fourier_coefficient(const SatakeVector& sv, const ExponentTuple& t, const SchurOptions& opts = {});

/// sum_j alpha_j^k = a(p^k).
Complex power_sum(const SatakeVector& sv, int k);

/// |a(p^k) - [B(1,..,1,p^k) - sum_{j=2}^{min(m,k)} (-1)^j B(.., p at entry m-j, .., p^{k-j})]|.
double hook_identity_residual(const SatakeVector& sv, int k, const SchurOptions& opts = {});

/// |s_lambda - s_{lambda + (j,...,j)}|. Requires det_one.
double shift_invariance_residual(const SatakeVector& sv, const Partition& lambda, int j,
                                 const SchurOptions& opts = {});

}  // namespace zdk::symfunc
