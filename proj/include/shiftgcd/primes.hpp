#pragma once

#include "shiftgcd/core.hpp"

namespace shiftgcd {

namespace detail {
inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}
}  // namespace detail

/// Deterministic Miller-Rabin for the full 64-bit range (the witness set
/// {2,...,37} is proven sufficient below 3.3e24).
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Deterministic for any magnitude: 64-bit witnesses where they apply, plain
/// trial division beyond (slow but proven; nothing in the toolkit generates
/// primes that large).
inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<std::uint64_t>::max())
    return is_prime(n.convert_to<std::uint64_t>());
  if (n % 2 == 0) return false;
  for (Integer p = 3; p * p <= n; p += 2) {
    if (n % p == 0) return false;
  }
  return true;
}

/// Ordered primes produced by a "first k primes above a threshold" policy.
struct PrimeTable {
  std::uint64_t threshold = 0;
  std::vector<std::uint64_t> primes;  // strictly increasing, all > threshold
};

inline PrimeTable primes_above(std::uint64_t threshold, std::size_t count) {
  if (count == 0) throw DomainError("primes_above: count must be >= 1");
  PrimeTable table;
  table.threshold = threshold;
  table.primes.reserve(count);
  std::uint64_t candidate = threshold < 2 ? 2 : threshold + 1;
  if (candidate == 2) {
    table.primes.push_back(2);
    candidate = 3;
  }
  if (candidate % 2 == 0) ++candidate;
  while (table.primes.size() < count) {
    if (is_prime(candidate)) table.primes.push_back(candidate);
    if (candidate > std::numeric_limits<std::uint64_t>::max() - 2)
      throw ResourceError("primes_above: candidate overflow");
    candidate += 2;
  }
  return table;
}

/// Jacobsthal function g(m): the largest distance between consecutive
/// integers coprime to m, computed by sieving one full period and closing
/// the cycle with the wrap-around gap.
inline std::uint64_t jacobsthal(std::uint64_t m,
                                std::uint64_t sieve_cap = 100'000'000) {
  if (m == 0) throw DomainError("jacobsthal: positive argument required");
  if (m > sieve_cap)
    throw ResourceError("jacobsthal: modulus " + std::to_string(m) +
                        " exceeds the sieve cap " + std::to_string(sieve_cap));
  if (m == 1) return 1;

  std::vector<std::uint64_t> prime_divisors;
  {
    std::uint64_t rest = m;
    for (std::uint64_t p = 2; p * p <= rest; p = (p == 2 ? 3 : p + 2)) {
      if (rest % p == 0) {
        prime_divisors.push_back(p);
        do {
          rest /= p;
        } while (rest % p == 0);
      }
    }
    if (rest > 1) prime_divisors.push_back(rest);
  }

  // blocked[v-1] <=> v in [1, m] shares a factor with m
  std::vector<bool> blocked(m, false);
  for (std::uint64_t p : prime_divisors)
    for (std::uint64_t v = p; v <= m; v += p) blocked[v - 1] = true;

  std::uint64_t max_gap = 0;
  std::uint64_t prev = 1;  // 1 is always coprime to m
  for (std::uint64_t v = 2; v <= m; ++v) {
    if (!blocked[v - 1]) {
      max_gap = std::max(max_gap, v - prev);
      prev = v;
    }
  }
  max_gap = std::max(max_gap, 1 + m - prev);  // wrap to the next period's 1
  return max_gap;
}

}  // namespace shiftgcd
