#include "zdk/arith.hpp"

#include <cmath>
#include <numeric>

#include "zdk/errors.hpp"

namespace zdk {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = i;
      primes.push_back(i);
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t ip = static_cast<std::uint64_t>(i) * p;
      if (p > spf[i] || ip > limit) break;
      spf[ip] = p;
    }
  }
  return spf;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    int k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.push_back({d, k});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (const auto& pk : factorize(n)) {
    if (pk.k > 1) return 0;
    sign = -sign;
  }
  return sign;
}

double von_mangoldt(std::uint64_t n) {
  auto pk = as_prime_power(n);
  return pk ? std::log(static_cast<double>(pk->p)) : 0.0;
}

int omega(std::uint64_t n) { return static_cast<int>(factorize(n).size()); }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) throw ValidationError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw ValidationError("integer power overflows 64 bits");
  }
  return r;
}

}  // namespace zdk
