#pragma once

#include "shiftgcd/arith.hpp"

namespace shiftgcd {

struct CoprimeShiftResult {
  ShiftVector shifts;
  IntVector shifted_vector;
  std::int64_t height_used;  // = height(shifts)
};

namespace detail {
inline bool pairwise_coprime(const std::vector<Integer>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (boost::multiprecision::gcd(v[i], v[j]) != 1) return false;
  return true;
}
}  // namespace detail

/// Greedy one-sided shifting: h_1 = 0, then each h_i is the smallest
/// non-negative shift making a_i + h_i coprime to the running product of the
/// already-shifted entries. Each step terminates within the Jacobsthal gap
/// of that product.
inline CoprimeShiftResult greedy_coprime(const IntVector& a) {
  if (a.size() < 2) throw DomainError("greedy_coprime: n must be >= 2");
  if (!a.all_positive()) throw DomainError("greedy_coprime: entries must be positive");

  std::vector<std::int64_t> shifts(a.size(), 0);
  std::vector<Integer> out;
  out.reserve(a.size());
  out.push_back(a[0]);
  Integer product = a[0];
  for (std::size_t i = 1; i < a.size(); ++i) {
    std::int64_t t = 0;
    Integer candidate = a[i];
    while (boost::multiprecision::gcd(product, candidate) != 1) {
      ++t;
      ++candidate;
    }
    shifts[i] = t;
    out.push_back(candidate);
    product *= candidate;
  }
  if (!detail::pairwise_coprime(out))
    throw InternalError("greedy_coprime: pairwise-coprime certificate failed");

  std::int64_t used = 0;
  for (std::int64_t s : shifts) used = std::max(used, s);
  return {ShiftVector(std::move(shifts), used), IntVector(std::move(out)), used};
}

namespace detail {
template <typename Pred>
std::int64_t min_height_with(const IntVector& a, std::uint64_t level_guard,
                             Pred&& accept, const char* op) {
  if (a.size() < 2) throw DomainError(std::string(op) + ": n must be >= 2");
  std::vector<Integer> image(a.size());
  for (std::int64_t H = 0;; ++H) {
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(H) + 1;
    if (!power_within(side, static_cast<int>(a.size()), level_guard))
      throw ResourceError(std::string(op) + ": no witness with height <= " +
                          std::to_string(H - 1) +
                          "; the next level exceeds the enumeration guard");
    std::vector<std::int64_t> h(a.size(), -H);
    do {
      for (std::size_t i = 0; i < a.size(); ++i) image[i] = a[i] + h[i];
      if (accept(image)) return H;
    } while (next_tuple(h, -H, H));
  }
}
}  // namespace detail

/// Smallest H admitting a shift of height <= H that makes all pairs coprime.
inline std::int64_t l_exact(const IntVector& a, std::uint64_t level_guard = 100'000'000) {
  return detail::min_height_with(
      a, level_guard,
      [](const std::vector<Integer>& v) { return detail::pairwise_coprime(v); },
      "l_exact");
}

/// Smallest H admitting a shift of height <= H with full-vector gcd 1.
inline std::int64_t ell_exact(const IntVector& a, std::uint64_t level_guard = 100'000'000) {
  return detail::min_height_with(
      a, level_guard,
      [](const std::vector<Integer>& v) {
        Integer g = 0;
        for (const Integer& e : v) {
          g = boost::multiprecision::gcd(g, e);
          if (g == 1) return true;
        }
        return g == 1;
      },
      "ell_exact");
}

struct GreedyAuditRow {
  IntVector a;
  std::vector<std::int64_t> shifts;
  std::int64_t height_used = 0;
  Integer hstar;      // height_star(a)
  double ratio = 0;   // height_used / log^2(hstar + 2)
  int steps_checked = 0;  // greedy steps whose running product fit the sieve cap
  int steps_within_jacobsthal = 0;
};

/// Seeded audit of the greedy construction: entries log-uniform in
/// [1, magnitude], shift height against the log^2 yardstick, and — whenever
/// the running product is small enough to sieve — the per-step certificate
/// h_i <= g(product).
inline std::vector<GreedyAuditRow> greedy_bound_audit(
    int samples, int n, const Integer& magnitude, std::uint64_t seed,
    std::uint64_t jacobsthal_cap = 100'000'000) {
  if (samples < 1) throw DomainError("greedy_bound_audit: samples must be >= 1");
  if (n < 2) throw DomainError("greedy_bound_audit: n must be >= 2");
  if (magnitude < 16) throw DomainError("greedy_bound_audit: magnitude must be >= 16");
  if (magnitude > std::numeric_limits<std::uint64_t>::max())
    throw ResourceError("greedy_bound_audit: magnitude beyond sampling range");
  const std::uint64_t mag = magnitude.convert_to<std::uint64_t>();
  const double log_mag = std::log(static_cast<double>(mag));

  Rng rng(seed);
  std::vector<GreedyAuditRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    std::vector<Integer> entries;
    entries.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double u = rng.uniform01();
      auto v = static_cast<std::uint64_t>(std::exp(u * log_mag));
      entries.emplace_back(std::clamp<std::uint64_t>(v, 1, mag));
    }
    IntVector a(std::move(entries));
    CoprimeShiftResult res = greedy_coprime(a);

    GreedyAuditRow row{a, res.shifts.entries(), res.height_used, height_star(a),
                       0.0, 0, 0};
    const double yardstick = log_approx(row.hstar + 2);
    row.ratio = static_cast<double>(row.height_used) / (yardstick * yardstick);

    Integer product = res.shifted_vector[0];
    for (std::size_t i = 1; i < a.size(); ++i) {
      if (product <= jacobsthal_cap) {
        ++row.steps_checked;
        const std::int64_t hi = row.shifts[i];
        // h_i <= 1 always sits under the gap; sieve only when it matters
        const bool within =
            hi <= 1 ||
            static_cast<std::uint64_t>(hi) <=
                jacobsthal(product.convert_to<std::uint64_t>(), jacobsthal_cap);
        if (within) ++row.steps_within_jacobsthal;
      }
      product *= res.shifted_vector[i];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace shiftgcd
