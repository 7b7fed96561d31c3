#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace zdk {

struct PrimePower {
  std::uint64_t p = 0;
  int k = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// spf[n] is the smallest prime factor of n for 2 <= n <= limit (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

bool is_prime(std::uint64_t n);

/// Trial-division factorization, primes in increasing order. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

/// (p, k) when n = p^k with k >= 1.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

int mobius(std::uint64_t n);

double von_mangoldt(std::uint64_t n);

/// Number of distinct prime factors.
int omega(std::uint64_t n);

/// Exact binomial coefficient; throws ValidationError on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Exact integer power; throws ValidationError on overflow.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace zdk
