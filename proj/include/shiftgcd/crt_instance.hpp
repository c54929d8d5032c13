#pragma once

#include "shiftgcd/arith.hpp"

namespace shiftgcd {

/// CRT-planted vector: one prime per shift tuple in [-H, H]^n, with
/// a_k = -i_k mod p_(i_1..i_n), so every shift of height <= H leaves the
/// matching prime inside gcd(a + h). Certifies ell(a) >= H + 1.
struct HardInstance {
  int n;
  std::int64_t H;
  std::vector<std::vector<std::int64_t>> tuples;  // lexicographic order
  std::vector<std::uint64_t> primes;              // primes[t] belongs to tuples[t]
  IntVector a;
  std::int64_t certified_lower_bound;  // H + 1 once verified
};

struct VerifyReport {
  bool pass = false;
  std::optional<std::vector<std::int64_t>> failing_tuple;
  std::string detail;
};

namespace detail {
inline std::uint64_t inverse_mod_u64(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; p prime and a != 0 mod p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw InternalError("inverse_mod_u64: arguments not coprime");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}
}  // namespace detail

inline VerifyReport verify_hard_instance(const HardInstance& inst,
                                         std::uint64_t cube_guard = 1'000'000);

inline HardInstance crt_hard_instance(int n, std::int64_t H,
                                      std::uint64_t prime_count_guard = 10'000) {
  if (n < 1) throw DomainError("crt_hard_instance: n must be >= 1");
  if (H < 1) throw DomainError("crt_hard_instance: H must be >= 1");
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(H) + 1;
  const auto count = power_within(side, n, prime_count_guard);
  if (!count)
    throw ResourceError("crt_hard_instance: (2H+1)^n exceeds the prime-count guard");

  std::vector<std::vector<std::int64_t>> tuples;
  tuples.reserve(*count);
  std::vector<std::int64_t> t(static_cast<std::size_t>(n), -H);
  do {
    tuples.push_back(t);
  } while (next_tuple(t, -H, H));
  std::vector<std::uint64_t> primes =
      primes_above(static_cast<std::uint64_t>(H), *count).primes;

  std::vector<Integer> a_entries;
  a_entries.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Integer x = 0, modulus = 1;
    for (std::size_t idx = 0; idx < tuples.size(); ++idx) {
      const std::uint64_t p = primes[idx];
      const std::int64_t ik = tuples[idx][static_cast<std::size_t>(k)];
      // target residue -i_k mod p; |i_k| <= H < p
      const std::uint64_t r =
          ik <= 0 ? static_cast<std::uint64_t>(-ik)
                  : p - static_cast<std::uint64_t>(ik);
      const std::uint64_t x_mod_p = (x % p).convert_to<std::uint64_t>();
      const std::uint64_t m_mod_p = (modulus % p).convert_to<std::uint64_t>();
      const std::uint64_t delta = (r + p - x_mod_p) % p;
      const std::uint64_t step = static_cast<std::uint64_t>(
          static_cast<__uint128_t>(delta) * detail::inverse_mod_u64(m_mod_p, p) % p);
      x += modulus * step;
      modulus *= p;
    }
    if (x == 0) x = modulus;  // smallest positive representative
    a_entries.push_back(std::move(x));
  }

  HardInstance inst{n,      H, std::move(tuples), std::move(primes),
                    IntVector(std::move(a_entries)), H + 1};
  const VerifyReport check =
      verify_hard_instance(inst, std::max<std::uint64_t>(*count, 1'000'000));
  if (!check.pass)
    throw InternalError("crt_hard_instance: construction failed verification: " +
                        check.detail);
  return inst;
}

/// Exhaustive certificate: every tuple's prime divides every a_k + i_k.
/// Failures are reported as values, not errors.
inline VerifyReport verify_hard_instance(const HardInstance& inst,
                                         std::uint64_t cube_guard) {
  if (inst.n < 1 || inst.H < 1) return {false, std::nullopt, "bad dimensions"};
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(inst.H) + 1;
  const auto count = power_within(side, inst.n, cube_guard);
  if (!count)
    throw ResourceError("verify_hard_instance: (2H+1)^n exceeds the cube guard");
  if (inst.tuples.size() != *count || inst.primes.size() != *count)
    return {false, std::nullopt, "tuple/prime table size mismatch"};
  if (inst.a.size() != static_cast<std::size_t>(inst.n))
    return {false, std::nullopt, "vector length mismatch"};
  if (inst.certified_lower_bound != inst.H + 1)
    return {false, std::nullopt, "certified bound is not H + 1"};

  {
    // the tuple table must cover [-H, H]^n exactly: any bijection onto the
    // cube certifies, but gaps or repeats would void the lower bound
    std::vector<std::vector<std::int64_t>> sorted_tuples = inst.tuples;
    std::sort(sorted_tuples.begin(), sorted_tuples.end());
    std::vector<std::int64_t> expected(static_cast<std::size_t>(inst.n), -inst.H);
    for (std::size_t idx = 0; idx < sorted_tuples.size(); ++idx) {
      if (sorted_tuples[idx] != expected)
        return {false, std::nullopt, "tuple table does not cover the shift cube"};
      next_tuple(expected, -inst.H, inst.H);
    }
  }
  {
    std::vector<std::uint64_t> sorted = inst.primes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return {false, std::nullopt, "primes not distinct"};
  }
  for (std::uint64_t p : inst.primes) {
    if (p <= static_cast<std::uint64_t>(inst.H))
      return {false, std::nullopt, "prime not above H"};
    if (!is_prime(p)) return {false, std::nullopt, std::to_string(p) + " is not prime"};
  }

  Integer product = 1;
  for (std::uint64_t p : inst.primes) product *= p;
  for (const Integer& e : inst.a)
    if (e < 1 || e > product)
      return {false, std::nullopt, "entry outside [1, prime product]"};

  for (std::size_t idx = 0; idx < inst.tuples.size(); ++idx) {
    const std::uint64_t p = inst.primes[idx];
    for (int k = 0; k < inst.n; ++k) {
      const Integer value = inst.a[static_cast<std::size_t>(k)] +
                            inst.tuples[idx][static_cast<std::size_t>(k)];
      if (value % p != 0)
        return {false, inst.tuples[idx],
                "prime " + std::to_string(p) + " misses coordinate " +
                    std::to_string(k + 1)};
    }
  }
  return {true, std::nullopt, ""};
}

struct GrowthRow {
  std::int64_t H = 0;
  std::size_t height_bits = 0;  // bit length of height(a)
  double log_height = 0;        // ln height(a)
  double lower_ratio = 0;       // (H+1) / (log h / log log h)^(1/n)
  double log_height_per_budget = 0;  // log h / (H^n log(H+2))
};

/// Size audit of generated instances against the (log h / log log h)^(1/n)
/// yardstick and the H^n log H growth of the prime product.
inline std::vector<GrowthRow> growth_audit(int n, const std::vector<std::int64_t>& h_range,
                                           std::uint64_t prime_count_guard = 10'000) {
  std::vector<GrowthRow> rows;
  rows.reserve(h_range.size());
  for (std::int64_t H : h_range) {
    const HardInstance inst = crt_hard_instance(n, H, prime_count_guard);
    GrowthRow row;
    row.H = H;
    const Integer h = height(inst.a);
    row.height_bits = bit_length(h);
    row.log_height = log_approx(h);
    const double inner = row.log_height / std::log(row.log_height);
    row.lower_ratio = static_cast<double>(H + 1) / std::pow(inner, 1.0 / n);
    row.log_height_per_budget =
        row.log_height /
        (std::pow(static_cast<double>(H), n) * std::log(static_cast<double>(H + 2)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace shiftgcd
