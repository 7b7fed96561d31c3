#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zdk/model.hpp"

namespace zdk::coeffs {

enum class Kind { lambda, mu, vonmangoldt, tau_m };

std::string to_string(Kind k);
Kind kind_from_string(const std::string& s);

/// Dense table of Dirichlet coefficients f(1..N); index 0 is unused.
struct CoefficientTable {
  Kind kind = Kind::lambda;
  std::uint64_t N = 0;
  int m = 1;
  std::vector<Complex> values;

  Complex operator[](std::uint64_t n) const { return values[n]; }
  Complex& operator[](std::uint64_t n) { return values[n]; }
};

/// Coefficients of 1/L_p(s) in p^{-s}: [1, -e_1, e_2, ..., (-1)^m e_m], with e_j read
/// off the Schur polynomial of the column partition (1^j).
std::vector<Complex> local_inverse_coefficients(const symfunc::SatakeVector& sv);

/// Local power series 1 + c_1 x + c_2 x^2 + ... of the requested kind at p, up to x^kmax.
/// For vonmangoldt the entries are a(p^k) (without the log p weight).
std::vector<Complex> local_series(const LocalFactor& f, int m, Kind kind, int kmax);

/// Builds the table by multiplicative extension (prime-power support for vonmangoldt).
/// Throws MissingLocalFactor(p) for the first uncovered prime p <= N.
CoefficientTable build_table(const LFunctionModel& model, Kind kind, std::uint64_t N);

/// (f * g)(n) = sum_{d | n} f(d) g(n/d). Throws CutoffMismatch for different N or m.
CoefficientTable dirichlet_convolution(const CoefficientTable& f, const CoefficientTable& g);

/// Number of ordered factorizations of n into m positive factors.
std::uint64_t tau_m(int m, std::uint64_t n);

struct BoundReport {
  double worst_ratio = 0.0;
  std::uint64_t worst_n = 1;
  std::uint64_t violations = 0;  // entries with ratio > 1 + 1e-10
  std::uint64_t checked = 0;
};

/// max |f(n)| / (tau_m(n) n^theta) for lambda/mu tables, or max |a(p^k)| / (m p^{k theta})
/// for vonmangoldt tables.
BoundReport bound_check(const CoefficientTable& table, double theta);

struct ExpansionRow {
  std::uint64_t n = 1;
  int sign = 1;
  /// n_1, ..., n_m with n = n_1 n_2^2 ... n_m^m and n_1 ... n_m squarefree.
  std::vector<std::uint64_t> parts;
  /// (n_{m-1}, ..., n_1): the argument tuple of B.
  std::vector<std::uint64_t> tuple;
  /// sign * B(n_{m-1}, ..., n_1) * (central factor from n_m).
  Complex term;
};

/// Rows for every n <= N coprime to the ramified primes whose prime exponents are all <= m.
std::vector<ExpansionRow> mpower_free_expansion(const LFunctionModel& model, std::uint64_t N);

/// mu(n) rebuilt from expansion rows (zero where no row exists).
std::vector<Complex> reconstruct_mu(const std::vector<ExpansionRow>& rows, std::uint64_t N);

/// CSV with header n,re,im and 17 significant digits.
void write_csv(const CoefficientTable& table, std::ostream& out);
CoefficientTable read_csv(std::istream& in, Kind kind, int m);

}  // namespace zdk::coeffs
