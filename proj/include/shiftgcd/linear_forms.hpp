#pragma once

#include "shiftgcd/arith.hpp"

#include <map>

namespace shiftgcd {

inline Integer dot(const IntVector& a, const IntVector& x) {
  if (a.size() != x.size()) throw DomainError("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

inline double zeta2_inv() { return 6.0 / (std::numbers::pi * std::numbers::pi); }

/// Error exponent 2n - n/(n^2 - n + 1) from the counting bound, reported as
/// a diagnostic next to observed errors.
inline double error_exponent_bound(int n) {
  return 2.0 * n - static_cast<double>(n) / (static_cast<double>(n) * n - n + 1);
}

namespace detail {

// Count of x_i in [1, h] per residue class mod d.
inline std::vector<std::uint64_t> class_occupancy(std::uint64_t h, std::uint64_t d) {
  std::vector<std::uint64_t> occ(d);
  for (std::uint64_t c = 0; c < d; ++c) {
    const std::uint64_t s = c == 0 ? d : c;  // class representative in [1, d]
    occ[c] = s > h ? 0 : (h - s) / d + 1;
  }
  return occ;
}

// Residue-class DP: fold one coordinate at a time, tracking the distribution
// of partial sums a_1 x_1 + ... mod d. O(n d^2).
template <typename Count>
Integer u_d_fold(const std::vector<std::uint64_t>& residues, std::uint64_t h,
                 std::uint64_t d) {
  const std::vector<std::uint64_t> occ = class_occupancy(h, d);
  std::vector<Count> dist(d, Count(0)), next(d);
  dist[0] = 1;
  for (std::uint64_t r : residues) {
    std::fill(next.begin(), next.end(), Count(0));
    for (std::uint64_t s = 0; s < d; ++s) {
      if (occ[s] == 0) continue;
      const auto step = static_cast<std::uint64_t>(
          static_cast<__uint128_t>(r) * s % d);
      const Count weight = Count(occ[s]);
      for (std::uint64_t c = 0; c < d; ++c) {
        if (dist[c] == 0) continue;
        std::uint64_t t = c + step;
        if (t >= d) t -= d;
        next[t] += dist[c] * weight;
      }
    }
    dist.swap(next);
  }
  return Integer(dist[0]);
}

inline std::vector<std::uint64_t> residues_mod(const IntVector& a, std::uint64_t d) {
  std::vector<std::uint64_t> out;
  out.reserve(a.size());
  for (const Integer& e : a) {
    Integer r = e % d;
    if (r < 0) r += d;
    out.push_back(r.convert_to<std::uint64_t>());
  }
  return out;
}

// whole-count fits in uint64: h^n < 2^62
inline bool counts_fit_u64(std::size_t n, std::int64_t h) {
  return static_cast<double>(n) * std::log2(static_cast<double>(h) + 1.0) < 62.0;
}

}  // namespace detail

/// U_d(a, h): number of x in [1,h]^n with d | a.x. Exact; counts are
/// unbounded (a fixed-width fast path applies whenever h^n fits).
inline Integer u_d(const IntVector& a, std::int64_t h, std::uint64_t d) {
  if (h < 1) throw DomainError("u_d: h must be >= 1");
  if (d < 1) throw DomainError("u_d: d must be >= 1");
  // positive entries give 0 < a.x <= n * height(a) * h
  if (a.all_positive() && Integer(d) > Integer(a.size()) * height(a) * h) return 0;
  const auto residues = detail::residues_mod(a, d);
  const auto hh = static_cast<std::uint64_t>(h);
  if (detail::counts_fit_u64(a.size(), h))
    return detail::u_d_fold<std::uint64_t>(residues, hh, d);
  return detail::u_d_fold<Integer>(residues, hh, d);
}

/// Oracle for u_d: direct enumeration of the cube.
inline Integer u_d_brute(const IntVector& a, std::int64_t h, std::uint64_t d,
                         std::uint64_t enumeration_guard = 10'000'000) {
  if (h < 1) throw DomainError("u_d_brute: h must be >= 1");
  if (d < 1) throw DomainError("u_d_brute: d must be >= 1");
  if (!power_within(static_cast<std::uint64_t>(h), static_cast<int>(a.size()),
                    enumeration_guard))
    throw ResourceError("u_d_brute: h^n exceeds the enumeration guard");

  const bool fast = height(a) * h * Integer(a.size()) < Integer(std::int64_t{1} << 62);
  Integer count = 0;
  std::vector<std::int64_t> x(a.size(), 1);
  if (fast) {
    std::vector<std::int64_t> a64;
    a64.reserve(a.size());
    for (const Integer& e : a) a64.push_back(e.convert_to<std::int64_t>());
    std::uint64_t c = 0;
    do {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < x.size(); ++i) s += a64[i] * x[i];
      if (s % static_cast<std::int64_t>(d) == 0) ++c;
    } while (next_tuple(x, 1, h));
    count = c;
  } else {
    do {
      Integer s = 0;
      for (std::size_t i = 0; i < x.size(); ++i) s += a[i] * x[i];
      if (s % d == 0) ++count;
    } while (next_tuple(x, 1, h));
  }
  return count;
}

namespace detail {
// a with positive entries, divided by its gcd; the count condition
// gcd(a.x, a.y) = gcd(a) reduces to coprimality for the reduced vector.
inline IntVector reduce_positive(const IntVector& a, const char* op) {
  if (!a.all_positive())
    throw DomainError(std::string(op) +
                      ": entries must be positive (zero linear forms would make "
                      "gcd(a.x, a.y) degenerate)");
  const Integer g = gcd_vec(a);
  std::vector<Integer> reduced;
  reduced.reserve(a.size());
  for (const Integer& e : a) reduced.push_back(e / g);
  return IntVector(std::move(reduced));
}

// multiset of attainable sums a.x over the cube [1,h]^n
inline std::map<Integer, Integer> sum_multiset(const IntVector& a, std::int64_t h) {
  std::map<Integer, Integer> counts;
  std::vector<std::int64_t> x(a.size(), 1);
  do {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
    ++counts[s];
  } while (next_tuple(x, 1, h));
  return counts;
}
}  // namespace detail

/// R(a, h) by direct enumeration: ordered pairs (x, y) in ([1,h]^n)^2 with
/// gcd(a.x, a.y) = gcd(a).
inline Integer r_brute(const IntVector& a, std::int64_t h,
                       std::uint64_t pair_guard = 100'000'000) {
  if (h < 1) throw DomainError("r_brute: h must be >= 1");
  const IntVector reduced = detail::reduce_positive(a, "r_brute");
  if (!power_within(static_cast<std::uint64_t>(h), 2 * static_cast<int>(a.size()),
                    pair_guard))
    throw ResourceError("r_brute: h^(2n) exceeds the enumeration guard");
  const auto sums = detail::sum_multiset(reduced, h);
  Integer total = 0;
  for (const auto& [s, ms] : sums)
    for (const auto& [t, mt] : sums)
      if (boost::multiprecision::gcd(s, t) == 1) total += ms * mt;
  return total;
}

/// R(a, h) by inclusion-exclusion: sum of mu(d) U_d(a', h)^2 over squarefree
/// d up to n * height(a') * h, which truncates exactly (no attainable a'.x
/// is divisible by anything larger).
inline Integer r_mobius(const IntVector& a, std::int64_t h,
                        std::uint64_t dmax_budget = 2'000) {
  if (h < 1) throw DomainError("r_mobius: h must be >= 1");
  const IntVector reduced = detail::reduce_positive(a, "r_mobius");
  const Integer dmax_exact = Integer(reduced.size()) * height(reduced) * h;
  if (dmax_exact > dmax_budget)
    throw ResourceError("r_mobius: exact truncation bound " + dmax_exact.str() +
                        " exceeds the d-scan budget " + std::to_string(dmax_budget));
  const auto dmax = dmax_exact.convert_to<std::uint64_t>();
  Integer total = 0;
  for (std::uint64_t d = 1; d <= dmax; ++d) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    const Integer u = u_d(reduced, h, d);
    if (u == 0) continue;
    total += mu * u * u;
  }
  // the sum is a count of pairs; a negative value means a broken term
  if (total < 0) throw InternalError("r_mobius: inclusion-exclusion went negative");
  return total;
}

struct CountReport {
  IntVector a;
  std::int64_t h = 0;
  Integer R;
  double main_term = 0;  // h^(2n) / zeta(2)
  double rel_error = 0;  // |R - main_term| / h^(2n)
  Integer d_max;         // n * height(a) * h: nothing beyond it divides any a.x
  std::vector<std::pair<std::uint64_t, Integer>> ud_table;  // squarefree d only
};

inline CountReport count_report(const IntVector& a, std::int64_t h,
                                std::uint64_t dmax_budget = 2'000,
                                bool with_ud_table = false) {
  CountReport rep{a, h, r_mobius(a, h, dmax_budget), 0, 0, 0, {}};
  rep.d_max = Integer(a.size()) * height(a) * h;
  const double pow_h2n = std::pow(static_cast<double>(h), 2.0 * a.size());
  rep.main_term = pow_h2n * zeta2_inv();
  rep.rel_error = std::abs(rep.R.convert_to<double>() - rep.main_term) / pow_h2n;
  if (with_ud_table) {
    // the table runs over the unreduced bound; entries past the reduced one
    // are exact zeros and make the truncation visible
    if (rep.d_max > dmax_budget)
      throw ResourceError("count_report: U_d table bound " + rep.d_max.str() +
                          " exceeds the d-scan budget " +
                          std::to_string(dmax_budget));
    const IntVector reduced = detail::reduce_positive(a, "count_report");
    for (std::uint64_t d = 1; d <= rep.d_max.convert_to<std::uint64_t>(); ++d)
      if (mobius(d) != 0) rep.ud_table.emplace_back(d, u_d(reduced, h, d));
  }
  return rep;
}

struct UdBoundRow {
  std::uint64_t d = 0;
  bool squarefree = false;
  Integer ud;
  bool asymp_applicable = false;  // d <= 2h/(3n)
  bool asymp_ok = true;           // |U^2 - h^2n/d^2| <= 8n h^(2n-1)/d
  bool u1_ok = true;              // U <= d^(n-1) (h/d + 1)^n
  bool u2_applicable = false;     // squarefree only
  bool u2_ok = true;              // U <= h^(n-1) (h d^(-1/n) + 1)
};

/// Checks the three U_d estimates with exact integer arithmetic (each bound
/// is cleared of fractional powers before comparing). Violations are
/// reported, never thrown.
inline std::vector<UdBoundRow> bound_audit(const IntVector& a, std::int64_t h,
                                           const std::vector<std::uint64_t>& d_samples) {
  if (h < 1) throw DomainError("bound_audit: h must be >= 1");
  if (!a.all_positive()) throw DomainError("bound_audit: entries must be positive");
  if (gcd_vec(a) != 1) throw DomainError("bound_audit: gcd(a) must be 1");
  const auto n = static_cast<int>(a.size());
  const Integer h2n = boost::multiprecision::pow(Integer(h), 2 * n);
  const Integer h2n1 = boost::multiprecision::pow(Integer(h), 2 * n - 1);
  const Integer hn1 = boost::multiprecision::pow(Integer(h), n - 1);
  const Integer hnn = boost::multiprecision::pow(Integer(h), n * n);

  std::vector<UdBoundRow> rows;
  rows.reserve(d_samples.size());
  for (std::uint64_t d : d_samples) {
    UdBoundRow row;
    row.d = d;
    row.squarefree = mobius(d) != 0;
    row.ud = u_d(a, h, d);
    const Integer D(d);

    row.asymp_applicable = Integer(3) * n * d <= Integer(2) * h;
    if (row.asymp_applicable) {
      // |U^2 d^2 - h^2n| <= 8 n d h^(2n-1)
      const Integer lhs =
          boost::multiprecision::abs(row.ud * row.ud * D * D - h2n);
      row.asymp_ok = lhs <= Integer(8) * n * D * h2n1;
    }

    // U d <= (h + d)^n
    row.u1_ok = row.ud * D <= boost::multiprecision::pow(Integer(h) + D, n);

    row.u2_applicable = row.squarefree;
    if (row.u2_applicable) {
      // U - h^(n-1) <= h^n d^(-1/n)  <=>  (U - h^(n-1))^n d <= h^(n^2)
      const Integer excess = row.ud - hn1;
      row.u2_ok = excess <= 0 ||
                  boost::multiprecision::pow(excess, n) * D <= hnn;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct ConvergenceRow {
  std::int64_t h = 0;
  Integer R;
  double ratio = 0;    // R / h^(2n)
  double abs_err = 0;  // |ratio - 1/zeta(2)|
};

inline std::vector<ConvergenceRow> convergence_sweep(const IntVector& a,
                                                     const std::vector<std::int64_t>& h_range,
                                                     std::uint64_t dmax_budget = 2'000) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(h_range.size());
  for (std::int64_t h : h_range) {
    ConvergenceRow row;
    row.h = h;
    row.R = r_mobius(a, h, dmax_budget);
    row.ratio = row.R.convert_to<double>() /
                std::pow(static_cast<double>(h), 2.0 * a.size());
    row.abs_err = std::abs(row.ratio - zeta2_inv());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace shiftgcd
