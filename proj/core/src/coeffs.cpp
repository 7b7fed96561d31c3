#include "zdk/coeffs.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <istream>
#include <ostream>
#include <sstream>

#include "zdk/arith.hpp"
#include "zdk/errors.hpp"

namespace zdk::coeffs {

namespace {

constexpr double kBoundSlack = 1e-10;

// Inverse of a power series with constant term 1, truncated at x^kmax.
std::vector<Complex> series_inverse(const std::vector<Complex>& c, int kmax) {
  std::vector<Complex> out(static_cast<std::size_t>(kmax) + 1, Complex{});
  out[0] = 1.0;
  for (int k = 1; k <= kmax; ++k) {
    Complex acc{};
    for (int i = 1; i <= k && i < static_cast<int>(c.size()); ++i)
      acc -= c[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(k - i)];
    out[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

// Largest k with p^k <= N.
int max_exponent(std::uint64_t p, std::uint64_t N) {
  int k = 0;
  std::uint64_t v = 1;
  while (v <= N / p) {
    v *= p;
    ++k;
  }
  return k;
}

}  // namespace

std::string to_string(Kind k) {
  switch (k) {
    case Kind::lambda: return "lambda";
    case Kind::mu: return "mu";
    case Kind::vonmangoldt: return "vonmangoldt";
    case Kind::tau_m: return "tau_m";
  }
  return "?";
}

Kind kind_from_string(const std::string& s) {
  if (s == "lambda") return Kind::lambda;
  if (s == "mu") return Kind::mu;
  if (s == "vonmangoldt") return Kind::vonmangoldt;
  if (s == "tau_m" || s == "tau") return Kind::tau_m;
  throw ValidationError("unknown table kind '" + s + "'");
}

std::vector<Complex> local_inverse_coefficients(const symfunc::SatakeVector& sv) {
  const int m = sv.m();
  std::vector<Complex> out(static_cast<std::size_t>(m) + 1);
  out[0] = 1.0;
  for (int j = 1; j <= m; ++j) {
    const Complex ej = symfunc::schur_bialternant(sv, symfunc::Partition(std::vector<int>(static_cast<std::size_t>(j), 1)));
    out[static_cast<std::size_t>(j)] = (j % 2 == 0) ? ej : -ej;
  }
  return out;
}

std::vector<Complex> local_series(const LocalFactor& f, int m, Kind kind, int kmax) {
  std::vector<Complex> out(static_cast<std::size_t>(kmax) + 1, Complex{});
  out[0] = 1.0;
  if (kind == Kind::tau_m) {
    for (int k = 1; k <= kmax; ++k)
      out[static_cast<std::size_t>(k)] =
          static_cast<double>(binomial(static_cast<std::uint64_t>(k + m - 1), static_cast<std::uint64_t>(m - 1)));
    return out;
  }
  if (f.sv) {
    const auto& sv = *f.sv;
    switch (kind) {
      case Kind::lambda:
        for (int k = 1; k <= kmax; ++k) out[static_cast<std::size_t>(k)] = symfunc::schur_bialternant(sv, {k});
        break;
      case Kind::mu: {
        const auto inv = local_inverse_coefficients(sv);
        for (int k = 1; k <= kmax && k < static_cast<int>(inv.size()); ++k)
          out[static_cast<std::size_t>(k)] = inv[static_cast<std::size_t>(k)];
        break;
      }
      case Kind::vonmangoldt:
        out[0] = 0.0;
        for (int k = 1; k <= kmax; ++k) out[static_cast<std::size_t>(k)] = symfunc::power_sum(sv, k);
        break;
      case Kind::tau_m: break;
    }
    return out;
  }
  // Ramified: the explicit lambda list is the only data.
  std::vector<Complex> lam(static_cast<std::size_t>(kmax) + 1, Complex{});
  lam[0] = 1.0;
  for (int k = 1; k <= kmax && k <= static_cast<int>(f.ramified_coeffs.size()); ++k)
    lam[static_cast<std::size_t>(k)] = f.ramified_coeffs[static_cast<std::size_t>(k - 1)];
  switch (kind) {
    case Kind::lambda: return lam;
    case Kind::mu: return series_inverse(lam, kmax);
    case Kind::vonmangoldt: {
      // x L'/L = sum a_k x^k  <=>  k lambda_k = sum_{i=1}^{k} a_i lambda_{k-i}.
      out[0] = 0.0;
      for (int k = 1; k <= kmax; ++k) {
        Complex acc = static_cast<double>(k) * lam[static_cast<std::size_t>(k)];
        for (int i = 1; i < k; ++i) acc -= out[static_cast<std::size_t>(i)] * lam[static_cast<std::size_t>(k - i)];
        out[static_cast<std::size_t>(k)] = acc;
      }
      return out;
    }
    case Kind::tau_m: break;
  }
  return out;
}

CoefficientTable build_table(const LFunctionModel& model, Kind kind, std::uint64_t N) {
  if (N < 1) throw ValidationError("cutoff N must be >= 1");
  if (N > 10'000'000) throw ValidationError("cutoff N above 1e7 is not supported");
  CoefficientTable t;
  t.kind = kind;
  t.N = N;
  t.m = model.m;
  t.values.assign(N + 1, Complex{});
  const auto spf = smallest_prime_factors(static_cast<std::uint32_t>(N));

  // Local values at every prime power p^k <= N, stored in place first.
  for (std::uint64_t p = 2; p <= N; ++p) {
    if (spf[p] != p) continue;
    const int kmax = max_exponent(p, N);
    const LocalFactor f = kind == Kind::tau_m ? LocalFactor{} : model.local(p);
    const auto series = local_series(f, model.m, kind, kmax);
    std::uint64_t pk = 1;
    const double logp = std::log(static_cast<double>(p));
    for (int k = 1; k <= kmax; ++k) {
      pk *= p;
      t.values[pk] = kind == Kind::vonmangoldt ? series[static_cast<std::size_t>(k)] * logp : series[static_cast<std::size_t>(k)];
    }
  }
  if (kind == Kind::vonmangoldt) {
    t.values[1] = 0.0;
    return t;
  }
  t.values[1] = 1.0;
  for (std::uint64_t n = 2; n <= N; ++n) {
    const std::uint64_t p = spf[n];
    std::uint64_t pk = 1, rest = n;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    if (rest != 1) t.values[n] = t.values[pk] * t.values[rest];
  }
  return t;
}

CoefficientTable dirichlet_convolution(const CoefficientTable& f, const CoefficientTable& g) {
  if (f.N != g.N || f.m != g.m) throw CutoffMismatch("convolution operands differ in N or m");
  CoefficientTable out;
  out.kind = f.kind;
  out.N = f.N;
  out.m = f.m;
  out.values.assign(f.N + 1, Complex{});
  for (std::uint64_t d = 1; d <= f.N; ++d) {
    const Complex fd = f.values[d];
    if (fd == Complex{}) continue;
    for (std::uint64_t e = 1; d * e <= f.N; ++e) out.values[d * e] += fd * g.values[e];
  }
  return out;
}

std::uint64_t tau_m(int m, std::uint64_t n) {
  if (m < 1 || n < 1) throw ValidationError("tau_m needs m >= 1 and n >= 1");
  std::uint64_t r = 1;
  for (const auto& pk : factorize(n))
    r *= binomial(static_cast<std::uint64_t>(pk.k + m - 1), static_cast<std::uint64_t>(m - 1));
  return r;
}

BoundReport bound_check(const CoefficientTable& table, double theta) {
  if (theta < 0.0 || theta >= 0.5) throw ValidationError("theta must lie in [0, 1/2)");
  BoundReport r;
  const auto spf = smallest_prime_factors(static_cast<std::uint32_t>(table.N));
  for (std::uint64_t n = 1; n <= table.N; ++n) {
    double ratio = 0.0;
    if (table.kind == Kind::vonmangoldt) {
      if (n < 2) continue;
      const std::uint64_t p = spf[n];
      std::uint64_t rest = n;
      int k = 0;
      while (rest % p == 0) {
        rest /= p;
        ++k;
      }
      if (rest != 1) continue;
      const double a = std::abs(table.values[n]) / std::log(static_cast<double>(p));
      ratio = a / (table.m * std::pow(static_cast<double>(p), k * theta));
    } else {
      // tau_m(n) from the sieve, to keep the scan linear.
      std::uint64_t tau = 1, rest = n;
      while (rest > 1) {
        const std::uint64_t p = spf[rest];
        int k = 0;
        while (rest % p == 0) {
          rest /= p;
          ++k;
        }
        tau *= binomial(static_cast<std::uint64_t>(k + table.m - 1), static_cast<std::uint64_t>(table.m - 1));
      }
      ratio = std::abs(table.values[n]) / (static_cast<double>(tau) * std::pow(static_cast<double>(n), theta));
    }
    ++r.checked;
    if (ratio > r.worst_ratio) {
      r.worst_ratio = ratio;
      r.worst_n = n;
    }
    if (ratio > 1.0 + kBoundSlack) ++r.violations;
  }
  return r;
}

std::vector<ExpansionRow> mpower_free_expansion(const LFunctionModel& model, std::uint64_t N) {
  if (N < 1) throw ValidationError("cutoff N must be >= 1");
  const int m = model.m;
  const auto spf = smallest_prime_factors(static_cast<std::uint32_t>(N));
  std::vector<ExpansionRow> rows;
  // Local B(.., p at entry j, ..) for j < m, plus the central factor prod alpha for j = m.
  std::map<std::uint64_t, std::vector<Complex>> local_b;
  for (std::uint64_t n = 1; n <= N; ++n) {
    ExpansionRow row;
    row.n = n;
    row.parts.assign(static_cast<std::size_t>(m), 1);
    row.term = 1.0;
    bool ok = true;
    int odd = 0;
    std::uint64_t rest = n;
    while (rest > 1 && ok) {
      const std::uint64_t p = spf[rest];
      int k = 0;
      while (rest % p == 0) {
        rest /= p;
        ++k;
      }
      if (k > m) {
        ok = false;
        break;
      }
      auto it = local_b.find(p);
      if (it == local_b.end()) {
        const auto f = model.local(p);
        std::vector<Complex> b;
        if (f.sv) {
          b.push_back(1.0);
          for (int j = 1; j <= m; ++j) {
            if (j < m) {
              std::vector<int> a(static_cast<std::size_t>(m - 1), 0);
              a[static_cast<std::size_t>(m - 1 - j)] = 1;  // a_j = 1
              b.push_back(symfunc::schur_bialternant(*f.sv, symfunc::ExponentTuple(a).induced_partition()));
            } else {
              b.push_back(f.sv->product());
            }
          }
        }
        it = local_b.emplace(p, std::move(b)).first;
      }
      if (it->second.empty()) {
        ok = false;  // ramified prime
        break;
      }
      row.parts[static_cast<std::size_t>(k - 1)] *= p;
      if (k % 2 == 1) ++odd;
      row.term *= it->second[static_cast<std::size_t>(k)];
    }
    if (!ok) continue;
    row.sign = (odd % 2 == 0) ? 1 : -1;
    row.term *= static_cast<double>(row.sign);
    for (int j = m - 1; j >= 1; --j) row.tuple.push_back(row.parts[static_cast<std::size_t>(j - 1)]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Complex> reconstruct_mu(const std::vector<ExpansionRow>& rows, std::uint64_t N) {
  std::vector<Complex> mu(N + 1, Complex{});
  for (const auto& r : rows)
    if (r.n <= N) mu[r.n] += r.term;
  return mu;
}

void write_csv(const CoefficientTable& table, std::ostream& out) {
  out << "n,re,im\n";
  out << std::setprecision(17);
  for (std::uint64_t n = 1; n <= table.N; ++n)
    out << n << ',' << table.values[n].real() << ',' << table.values[n].imag() << '\n';
}

CoefficientTable read_csv(std::istream& in, Kind kind, int m) {
  CoefficientTable t;
  t.kind = kind;
  t.m = m;
  t.values.assign(1, Complex{});
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line.rfind("n,", 0) == 0) continue;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string a, b, c;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c))
      throw ParseError(lineno, "expected n,re,im");
    try {
      const auto n = std::stoull(a);
      if (n != t.values.size()) throw ParseError(lineno, "rows must be consecutive from n = 1");
      t.values.emplace_back(std::stod(b), std::stod(c));
    } catch (const std::logic_error&) {
      throw ParseError(lineno, "malformed number");
    }
  }
  t.N = t.values.size() - 1;
  return t;
}

}  // namespace zdk::coeffs
