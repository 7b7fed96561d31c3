#include "zdk/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "json.hpp"

#include "zdk/arith.hpp"
#include "zdk/errors.hpp"

namespace zdk {

namespace {

constexpr double kValueTol = 1e-9;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ typedef unsigned __int128 u128;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// A cyclic factor of (Z/qZ)^*: generator (as a residue mod q via CRT) and its order.
struct CyclicFactor {
  std::uint64_t generator;
  std::uint64_t order;
};

std::uint64_t primitive_root_mod_prime(std::uint64_t p) {
  if (p == 2) return 1;
  const auto f = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& pk : f)
      if (powmod(g, (p - 1) / pk.p, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw ValidationError("no primitive root found");
}

// Residue that is g mod `modulus` and 1 mod q/modulus.
std::uint64_t crt_lift(std::uint64_t g, std::uint64_t modulus, std::uint64_t q) {
  for (std::uint64_t x = g; x < q; x += modulus)
    if (x % (q / modulus) == 1 % (q / modulus)) return x;
  throw ValidationError("CRT lift failed");
}

std::vector<CyclicFactor> cyclic_factors(std::uint64_t q) {
  std::vector<CyclicFactor> out;
  for (const auto& pk : factorize(q)) {
    const std::uint64_t pe = ipow(pk.p, static_cast<unsigned>(pk.k));
    if (pk.p == 2) {
      if (pk.k >= 2) out.push_back({crt_lift(pe - 1, pe, q), 2});
      if (pk.k >= 3) out.push_back({crt_lift(5, pe, q), pe / 4});
    } else {
      std::uint64_t g = primitive_root_mod_prime(pk.p);
      if (pk.k >= 2 && powmod(g, pk.p - 1, pk.p * pk.p) == 1) g += pk.p;
      out.push_back({crt_lift(g, pe, q), pe / pk.p * (pk.p - 1)});
    }
  }
  return out;
}

Complex unit_root(std::uint64_t num, std::uint64_t den) {
  const double a = 2.0 * std::numbers::pi * static_cast<double>(num % den) / static_cast<double>(den);
  // Snap the rational angles that have exact values so real characters stay real.
  const std::uint64_t r = num % den;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == den) return {-1.0, 0.0};
  if (4 * r == den) return {0.0, 1.0};
  if (4 * r == 3 * den) return {0.0, -1.0};
  return std::polar(1.0, a);
}

Complex parse_complex(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw ValidationError("complex value must be a number or [re, im]");
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::uint64_t q, std::vector<Complex> values, std::string label)
    : q_(q), values_(std::move(values)), label_(std::move(label)) {
  if (q_ == 0) throw ValidationError("modulus must be positive");
  if (values_.size() != q_) throw ValidationError("character table must have q entries");
  for (std::uint64_t a = 0; a < q_; ++a) {
    const bool unit = std::gcd(a, q_) == 1;
    const double mod = std::abs(values_[a]);
    if (unit && std::abs(mod - 1.0) > kValueTol) throw ValidationError("character value off the unit circle");
    if (!unit && mod > kValueTol) throw ValidationError("character must vanish on non-units");
  }
  for (std::uint64_t a = 1; a < q_; ++a)
    for (std::uint64_t b = a; b < q_; ++b)
      if (std::abs(values_[a] * values_[b] - values_[a * b % q_]) > kValueTol)
        throw ValidationError("character table is not multiplicative");
  if (q_ == 1) {
    values_[0] = 1.0;
  }
  const Complex minus_one = (*this)(-1);
  parity_ = (std::abs(minus_one - Complex{1.0, 0.0}) < kValueTol) ? 0 : 1;
  if (label_.empty()) label_ = "chi_mod_" + std::to_string(q_);
}

Complex DirichletCharacter::operator()(std::int64_t n) const noexcept {
  const auto q = static_cast<std::int64_t>(q_);
  std::int64_t r = n % q;
  if (r < 0) r += q;
  return values_[static_cast<std::size_t>(r)];
}

bool DirichletCharacter::is_principal() const noexcept {
  for (std::uint64_t a = 0; a < q_; ++a)
    if (std::gcd(a, q_) == 1 && std::abs(values_[a] - Complex{1.0, 0.0}) > kValueTol) return false;
  return true;
}

bool DirichletCharacter::is_real() const noexcept {
  for (const auto& v : values_)
    if (std::abs(v.imag()) > kValueTol) return false;
  return true;
}

std::uint64_t DirichletCharacter::conductor() const {
  for (std::uint64_t d = 1; d <= q_; ++d) {
    if (q_ % d != 0) continue;
    bool induced = true;
    for (std::uint64_t a = 1; a < q_ && induced; ++a)
      if (std::gcd(a, q_) == 1 && a % d == 1 % d && std::abs(values_[a] - Complex{1.0, 0.0}) > kValueTol)
        induced = false;
    if (induced) return d;
  }
  return q_;
}

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<Complex> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::conj(values_[i]);
  return DirichletCharacter(q_, std::move(v), label_ + "_bar");
}

Complex DirichletCharacter::gauss_sum() const {
  Complex t{};
  for (std::uint64_t a = 1; a < q_; ++a) t += values_[a] * unit_root(a, q_);
  if (q_ == 1) t = 1.0;
  return t;
}

Complex DirichletCharacter::root_number_gauss() const {
  const Complex ia = parity_ == 0 ? Complex{1.0, 0.0} : Complex{0.0, 1.0};
  return gauss_sum() / (ia * std::sqrt(static_cast<double>(q_)));
}

std::vector<DirichletCharacter> DirichletCharacter::all(std::uint64_t q) {
  if (q == 0) throw ValidationError("modulus must be positive");
  if (q == 1) return {DirichletCharacter(1, {Complex{1.0, 0.0}}, "chi_1_0")};
  const auto gens = cyclic_factors(q);
  // Discrete logarithm of every unit with respect to the generators.
  std::vector<std::vector<std::uint64_t>> dlog(q);
  {
    std::vector<std::uint64_t> exps(gens.size(), 0);
    for (;;) {
      std::uint64_t x = 1 % q;
      for (std::size_t i = 0; i < gens.size(); ++i) x = mulmod(x, powmod(gens[i].generator, exps[i], q), q);
      dlog[x] = exps;
      std::size_t i = 0;
      while (i < gens.size() && ++exps[i] == gens[i].order) exps[i++] = 0;
      if (i == gens.size()) break;
    }
  }
  std::vector<DirichletCharacter> out;
  std::vector<std::uint64_t> e(gens.size(), 0);
  std::size_t index = 0;
  for (;;) {
    std::vector<Complex> v(q, Complex{});
    for (std::uint64_t a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      // chi(a) = prod_i e(e_i * dlog_i(a) / ord_i), combined over a common denominator.
      std::uint64_t den = 1;
      for (const auto& g : gens) den = std::lcm(den, g.order);
      std::uint64_t num = 0;
      for (std::size_t i = 0; i < gens.size(); ++i)
        num = (num + e[i] * dlog[a][i] % gens[i].order * (den / gens[i].order)) % den;
      v[a] = unit_root(num, den);
    }
    out.emplace_back(q, std::move(v), "chi_" + std::to_string(q) + "_" + std::to_string(index++));
    std::size_t i = gens.size();
    // Lexicographic increment, last generator fastest.
    while (i > 0) {
      --i;
      if (++e[i] < gens[i].order) break;
      e[i] = 0;
      if (i == 0) return out;
    }
    if (gens.empty()) return out;
  }
}

std::vector<DirichletCharacter> DirichletCharacter::primitive(std::uint64_t q) {
  std::vector<DirichletCharacter> out;
  for (auto& chi : all(q))
    if (chi.is_primitive()) out.push_back(std::move(chi));
  return out;
}

DirichletCharacter DirichletCharacter::mod4() { return DirichletCharacter(4, {0.0, 1.0, 0.0, -1.0}, "chi_4_1"); }

DirichletCharacter character_from_json(const std::string& text, std::string label) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  if (!j.is_array()) throw ValidationError("character table must be a JSON array");
  std::vector<Complex> v;
  for (const auto& x : j) v.push_back(parse_complex(x));
  return DirichletCharacter(v.size(), std::move(v), std::move(label));
}

std::string character_to_json(const DirichletCharacter& chi) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& v : chi.values()) j.push_back({v.real(), v.imag()});
  return j.dump();
}

}  // namespace zdk
