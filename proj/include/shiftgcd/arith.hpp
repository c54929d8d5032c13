#pragma once

#include "shiftgcd/core.hpp"
#include "shiftgcd/primes.hpp"

namespace shiftgcd {

/// gcd of all entries, non-negative; 0 only for the all-zero vector.
inline Integer gcd_vec(const IntVector& a) {
  Integer g = 0;
  for (const Integer& e : a) {
    g = boost::multiprecision::gcd(g, e);
    if (g == 1) break;
  }
  return g;
}

/// Height: max |a_i|.
inline Integer height(const IntVector& a) {
  Integer m = 0;
  for (const Integer& e : a) {
    Integer v = boost::multiprecision::abs(e);
    if (v > m) m = std::move(v);
  }
  return m;
}

/// min over i of max over j != i of |a_j|, i.e. the second-largest |a_j|.
inline Integer height_star(const IntVector& a) {
  if (a.size() < 2) throw DomainError("height_star: at least two entries required");
  Integer top = -1, second = -1;
  for (const Integer& e : a) {
    Integer v = boost::multiprecision::abs(e);
    if (v > top) {
      second = std::move(top);
      top = std::move(v);
    } else if (v > second) {
      second = std::move(v);
    }
  }
  return second;
}

/// Number of distinct prime divisors. Trial division by candidates up to
/// trial_limit; a remaining cofactor is counted only when provably prime
/// (below trial_limit^2 or a 64-bit value passing the deterministic test),
/// anything larger is refused rather than guessed.
inline int omega(Integer k, std::uint64_t trial_limit = 1'000'000) {
  if (k <= 0) throw DomainError("omega: positive argument required");
  int count = 0;
  bool below_trial_square = false;  // loop left because p*p exceeded the cofactor
  for (std::uint64_t p = 2; p <= trial_limit; p = (p == 2 ? 3 : p + 2)) {
    if (Integer(p) * p > k) {
      below_trial_square = true;
      break;
    }
    if (k % p == 0) {
      ++count;
      do {
        k /= p;
      } while (k % p == 0);
    }
  }
  if (k > 1) {
    const Integer trial_square = Integer(trial_limit) * trial_limit;
    if (below_trial_square || k < trial_square) {
      ++count;  // no factor up to its square root: prime
    } else if (k <= std::numeric_limits<std::uint64_t>::max() &&
               is_prime(k.convert_to<std::uint64_t>())) {
      ++count;
    } else {
      // last cheap shot: a square of a provably prime root
      const Integer root = boost::multiprecision::sqrt(k);
      const bool is_square = root * root == k;
      const bool root_prime =
          is_square &&
          (root < trial_square ||
           (root <= std::numeric_limits<std::uint64_t>::max() &&
            is_prime(root.convert_to<std::uint64_t>())));
      if (root_prime)
        ++count;
      else
        throw ResourceError("omega: cofactor exceeds the trial-division bound");
    }
  }
  return count;
}

/// Moebius function: mu(1)=1, 0 on non-squarefree d, else (-1)^(#prime factors).
inline int mobius(std::uint64_t d) {
  if (d == 0) throw DomainError("mobius: positive argument required");
  int count = 0;
  for (std::uint64_t p = 2; p * p <= d; p = (p == 2 ? 3 : p + 2)) {
    if (d % p == 0) {
      d /= p;
      if (d % p == 0) return 0;
      ++count;
    }
  }
  if (d > 1) ++count;
  return (count % 2 == 0) ? 1 : -1;
}

}  // namespace shiftgcd
