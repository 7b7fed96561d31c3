#include "zdk/symfunc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "zdk/errors.hpp"

namespace zdk::symfunc {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

template <class C>
C cpow(C z, int n) {
  C r{1, 0};
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

using LComplex = std::complex<long double>;

// Determinant by Gaussian elimination with partial pivoting; `a` is row-major n x n.
template <class C>
C determinant(std::vector<C> a, int n) {
  C det{1, 0};
  for (int col = 0; col < n; ++col) {
    int piv = col;
    auto best = std::abs(a[static_cast<std::size_t>(col * n + col)]);
    for (int r = col + 1; r < n; ++r) {
      const auto v = std::abs(a[static_cast<std::size_t>(r * n + col)]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0) return {0, 0};
    if (piv != col) {
      for (int c = 0; c < n; ++c)
        std::swap(a[static_cast<std::size_t>(piv * n + c)], a[static_cast<std::size_t>(col * n + c)]);
      det = -det;
    }
    const C d = a[static_cast<std::size_t>(col * n + col)];
    det *= d;
    for (int r = col + 1; r < n; ++r) {
      const C f = a[static_cast<std::size_t>(r * n + col)] / d;
      if (f == C{}) continue;
      for (int c = col + 1; c < n; ++c)
        a[static_cast<std::size_t>(r * n + c)] -= f * a[static_cast<std::size_t>(col * n + c)];
    }
  }
  return det;
}

constexpr int kTableauMaxSize = 12;
constexpr int kTableauMaxDegree = 5;

// Multiplicity of each content vector among SSYT of the given shape.
class ContentEnumerator {
 public:
  ContentEnumerator(const Partition& shape, int m) : shape_(shape), m_(m) {
    for (int r = 0; r < shape.length(); ++r)
      for (int c = 0; c < shape[r]; ++c) cells_.push_back({r, c});
    fill_.assign(cells_.size(), 0);
    content_.assign(static_cast<std::size_t>(m), 0);
  }

  std::map<std::vector<int>, std::uint64_t> run() {
    recurse(0);
    return std::move(counts_);
  }

 private:
  int value_at(int r, int c) const {
    int offset = 0;
    for (int i = 0; i < r; ++i) offset += shape_[i];
    return fill_[static_cast<std::size_t>(offset + c)];
  }

  void recurse(std::size_t idx) {
    if (idx == cells_.size()) {
      ++counts_[content_];
      return;
    }
    const auto [r, c] = cells_[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, value_at(r, c - 1));
    if (r > 0) lo = std::max(lo, value_at(r - 1, c) + 1);
    for (int v = lo; v <= m_; ++v) {
      fill_[idx] = v;
      ++content_[static_cast<std::size_t>(v - 1)];
      recurse(idx + 1);
      --content_[static_cast<std::size_t>(v - 1)];
    }
  }

  const Partition& shape_;
  int m_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<int> fill_;
  std::vector<int> content_;
  std::map<std::vector<int>, std::uint64_t> counts_;
};

struct GaussianInt {
  i128 re = 0;
  i128 im = 0;
};

bool checked_mul(GaussianInt a, GaussianInt b, GaussianInt& out) {
  i128 t1, t2, t3, t4;
  if (__builtin_mul_overflow(a.re, b.re, &t1) || __builtin_mul_overflow(a.im, b.im, &t2) ||
      __builtin_mul_overflow(a.re, b.im, &t3) || __builtin_mul_overflow(a.im, b.re, &t4))
    return false;
  if (__builtin_sub_overflow(t1, t2, &out.re) || __builtin_add_overflow(t3, t4, &out.im)) return false;
  return true;
}

// Exact evaluation when every alpha is a Gaussian integer; nullopt on overflow or
// non-integral input.
std::optional<Complex> exact_gaussian_eval(std::span<const Complex> alphas,
                                           const std::map<std::vector<int>, std::uint64_t>& counts) {
  constexpr double kLimit = 1048576.0;
  std::vector<GaussianInt> g;
  for (const auto& a : alphas) {
    if (a.real() != std::trunc(a.real()) || a.imag() != std::trunc(a.imag())) return std::nullopt;
    if (std::abs(a.real()) > kLimit || std::abs(a.imag()) > kLimit) return std::nullopt;
    g.push_back({static_cast<i128>(a.real()), static_cast<i128>(a.imag())});
  }
  GaussianInt total;
  for (const auto& [content, mult] : counts) {
    GaussianInt term{static_cast<i128>(mult), 0};
    for (std::size_t j = 0; j < content.size(); ++j)
      for (int e = 0; e < content[j]; ++e)
        if (!checked_mul(term, g[j], term)) return std::nullopt;
    if (__builtin_add_overflow(total.re, term.re, &total.re) ||
        __builtin_add_overflow(total.im, term.im, &total.im))
      return std::nullopt;
  }
  return Complex{static_cast<double>(total.re), static_cast<double>(total.im)};
}

void require_det_one(const SatakeVector& sv, const char* op) {
  if (!sv.det_one())
    throw ValidationError(std::string(op) + " requires Satake parameters with product 1");
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ValidationError("partition parts must be nonnegative");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw ValidationError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::shifted(int j, int m) const {
  if (length() > m) throw ValidationError("partition longer than the number of variables");
  std::vector<int> p(static_cast<std::size_t>(m), j);
  for (int i = 0; i < length(); ++i) p[static_cast<std::size_t>(i)] += parts_[static_cast<std::size_t>(i)];
  return Partition(std::move(p));
}

Partition Partition::strip_full_columns(int m) const {
  if (length() < m) return *this;
  const int full = (*this)[m - 1];
  std::vector<int> p(parts_);
  for (auto& x : p) x -= full;
  return Partition(std::move(p));
}

std::vector<Partition> Partition::all_of_size(int n, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int v = std::min(remaining, cap); v >= 1; --v) {
      cur.push_back(v);
      self(self, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Partition> Partition::all_up_to(int n, int max_parts) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto part = all_of_size(k, max_parts);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// ------------------------------------------------------------- SatakeVector

SatakeVector::SatakeVector(std::vector<Complex> alphas, std::uint64_t prime)
    : alphas_(std::move(alphas)), prime_(prime) {
  if (alphas_.empty()) throw ValidationError("a Satake vector needs m >= 1 parameters");
  unitary_ = std::all_of(alphas_.begin(), alphas_.end(),
                         [](const Complex& a) { return std::abs(std::abs(a) - 1.0) <= kFlagTolerance; });
  det_one_ = std::abs(product() - Complex{1.0, 0.0}) <= kFlagTolerance;
}

Complex SatakeVector::product() const noexcept {
  Complex p{1.0, 0.0};
  for (const auto& a : alphas_) p *= a;
  return p;
}

double SatakeVector::min_separation() const noexcept {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < alphas_.size(); ++i)
    for (std::size_t j = i + 1; j < alphas_.size(); ++j) best = std::min(best, std::abs(alphas_[i] - alphas_[j]));
  return best;
}

double SatakeVector::max_modulus() const noexcept {
  double best = 0.0;
  for (const auto& a : alphas_) best = std::max(best, std::abs(a));
  return best;
}

bool SatakeVector::satisfies_ramanujan_bound(double theta) const {
  if (prime_ < 2) throw ValidationError("Ramanujan bound check needs a prime label");
  const double bound = std::pow(static_cast<double>(prime_), theta);
  return max_modulus() <= bound * (1.0 + kFlagTolerance);
}

double ramanujan_exponent(int m) { return 0.5 - 1.0 / (static_cast<double>(m) * m + 1.0); }

// ------------------------------------------------------------ ExponentTuple

ExponentTuple::ExponentTuple(std::vector<int> a) : a_(std::move(a)) {
  for (int x : a_)
    if (x < 0) throw ValidationError("exponent tuple entries must be nonnegative");
}

int ExponentTuple::at(int i) const {
  const int m = degree();
  if (i < 1 || i > m - 1) throw ValidationError("exponent index out of range");
  return a_[static_cast<std::size_t>(m - 1 - i)];
}

Partition ExponentTuple::induced_partition() const {
  // lambda_i = a_{m-1} + ... + a_i, i.e. a prefix sum of the stored order.
  std::vector<int> lam(a_.size());
  int running = 0;
  for (std::size_t idx = 0; idx < a_.size(); ++idx) {
    running += a_[idx];
    lam[a_.size() - 1 - idx] = running;
  }
  return Partition(std::move(lam));
}

ExponentTuple ExponentTuple::reversed() const { return ExponentTuple(std::vector<int>(a_.rbegin(), a_.rend())); }

// ------------------------------------------------------------- evaluation

std::vector<Complex> elementary_symmetric(std::span<const Complex> alphas) {
  std::vector<Complex> e(alphas.size() + 1, Complex{});
  e[0] = 1.0;
  for (std::size_t j = 0; j < alphas.size(); ++j)
    for (std::size_t k = j + 1; k >= 1; --k) e[k] += alphas[j] * e[k - 1];
  return e;
}

Complex schur_tableau_oracle(const SatakeVector& sv, const Partition& lambda) {
  const int m = sv.m();
  if (lambda.size() > kTableauMaxSize || m > kTableauMaxDegree)
    throw SizeLimit("tableau enumeration limited to |lambda| <= 12 and m <= 5");
  if (lambda.length() > m) return {0.0, 0.0};
  const auto counts = ContentEnumerator(lambda, m).run();
  if (auto exact = exact_gaussian_eval(sv.alphas(), counts)) return *exact;
  Complex total{};
  for (const auto& [content, mult] : counts) {
    Complex term{static_cast<double>(mult), 0.0};
    for (std::size_t j = 0; j < content.size(); ++j) term *= cpow(sv.alphas()[j], content[j]);
    total += term;
  }
  return total;
}

std::uint64_t count_ssyt(const Partition& lambda, int m) {
  if (lambda.length() > m) return 0;
  // Hook-content formula: prod (m + c(u)) / h(u), kept reduced in exact integers.
  u128 num = 1, den = 1;
  auto gcd128 = [](u128 a, u128 b) {
    while (b != 0) {
      const auto t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) {
      int leg = 0;
      while (lambda[r + leg + 1] > c) ++leg;
      const int arm = lambda[r] - c - 1;
      num *= static_cast<unsigned>(m + c - r);
      den *= static_cast<unsigned>(arm + leg + 1);
      const auto g = gcd128(num, den);
      num /= g;
      den /= g;
      if (num > UINT64_MAX) throw ValidationError("SSYT count overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(num / den);
}

Complex schur_jacobi_trudi(const SatakeVector& sv, const Partition& lambda) {
  const int m = sv.m();
  if (lambda.length() > m) return {0.0, 0.0};
  const int ell = lambda.length();
  if (ell == 0) return {1.0, 0.0};
  const int kmax = lambda[0] + ell;
  const auto e = elementary_symmetric(sv.alphas());
  std::vector<Complex> h(static_cast<std::size_t>(kmax) + 1, Complex{});
  h[0] = 1.0;
  for (int k = 1; k <= kmax; ++k) {
    Complex acc{};
    for (int j = 1; j <= std::min(k, m); ++j) {
      const Complex term = e[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(k - j)];
      acc += (j % 2 == 1) ? term : -term;
    }
    h[static_cast<std::size_t>(k)] = acc;
  }
  std::vector<Complex> mat(static_cast<std::size_t>(ell * ell));
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j) {
      const int idx = lambda[i] - i + j;
      mat[static_cast<std::size_t>(i * ell + j)] = idx < 0 ? Complex{} : h[static_cast<std::size_t>(idx)];
    }
  return determinant(std::move(mat), ell);
}

Complex schur_bialternant(const SatakeVector& sv, const Partition& lambda, const SchurOptions& opts) {
  const int m = sv.m();
  if (lambda.length() > m) return {0.0, 0.0};
  const auto alphas = sv.alphas();
  if (m == 1) return cpow(alphas[0], lambda[0]);
  // Closed forms: s_() = 1, s_(1) = e_1, s_(j^m) = e_m^j.
  if (lambda.empty()) return {1.0, 0.0};
  if (lambda.size() == 1) {
    Complex s{};
    for (const auto& a : alphas) s += a;
    return s;
  }
  if (lambda.length() == m && lambda[0] == lambda[m - 1]) return cpow(sv.product(), lambda[0]);
  if (sv.min_separation() < opts.confluence_threshold) {
    if (!opts.allow_fallback)
      throw ConfluentParameters("Satake parameters closer than " + std::to_string(opts.confluence_threshold));
    if (lambda.size() <= kTableauMaxSize && m <= kTableauMaxDegree) return schur_tableau_oracle(sv, lambda);
    return schur_jacobi_trudi(sv, lambda);
  }
  // The Vandermonde division loses roughly log10(1/separation) digits per pair, so
  // both alternants are formed in extended precision.
  std::vector<LComplex> la(alphas.begin(), alphas.end());
  std::vector<LComplex> num(static_cast<std::size_t>(m * m));
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k)
      num[static_cast<std::size_t>(j * m + k)] = cpow(la[static_cast<std::size_t>(j)], lambda[k] + m - 1 - k);
  LComplex vandermonde{1, 0};
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) vandermonde *= la[static_cast<std::size_t>(i)] - la[static_cast<std::size_t>(j)];
  const LComplex r = determinant(std::move(num), m) / vandermonde;
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

Complex fourier_coefficient(const SatakeVector& sv, const ExponentTuple& t, const SchurOptions& opts) {
  require_det_one(sv, "fourier_coefficient");
  if (t.degree() != sv.m()) throw ValidationError("exponent tuple length must be m - 1");
  return schur_bialternant(sv, t.induced_partition(), opts);
}

Complex power_sum(const SatakeVector& sv, int k) {
  if (k < 1) throw ValidationError("power_sum needs k >= 1");
  Complex s{};
  for (const auto& a : sv.alphas()) s += cpow(a, k);
  return s;
}

double hook_identity_residual(const SatakeVector& sv, int k, const SchurOptions& opts) {
  require_det_one(sv, "hook_identity_residual");
  if (k < 1) throw ValidationError("hook identity needs k >= 1");
  const int m = sv.m();
  const Complex lhs = power_sum(sv, k);
  if (m == 1) return std::abs(lhs - Complex{1.0, 0.0});

  // Tuples are stored as (a_{m-1}, ..., a_1); a_i lives at index m-1-i.
  auto tuple_with = [m](int i_p, int a1) {
    std::vector<int> a(static_cast<std::size_t>(m - 1), 0);
    a[static_cast<std::size_t>(m - 2)] = a1;
    if (i_p >= 1 && i_p <= m - 1) a[static_cast<std::size_t>(m - 1 - i_p)] += 1;
    return ExponentTuple(std::move(a));
  };
  Complex rhs = fourier_coefficient(sv, tuple_with(0, k), opts);
  for (int j = 2; j <= std::min(m, k); ++j) {
    // "p at entry m-j" counts positions from the left, i.e. it sits in a_j; for
    // j = m that entry does not exist.
    const Complex b = fourier_coefficient(sv, tuple_with(j < m ? j : 0, k - j), opts);
    rhs -= (j % 2 == 0) ? b : -b;
  }
  return std::abs(lhs - rhs);
}

double shift_invariance_residual(const SatakeVector& sv, const Partition& lambda, int j, const SchurOptions& opts) {
  require_det_one(sv, "shift_invariance_residual");
  if (j < 0) throw ValidationError("shift must be nonnegative");
  return std::abs(schur_bialternant(sv, lambda, opts) - schur_bialternant(sv, lambda.shifted(j, sv.m()), opts));
}

}  // namespace zdk::symfunc
