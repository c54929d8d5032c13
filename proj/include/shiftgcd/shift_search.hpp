#pragma once

#include "shiftgcd/arith.hpp"

namespace shiftgcd {

struct ShiftSearchOptions {
  // Permit height bounds >= min a_i. Shifted entries may then hit zero; the
  // all-zero image is still rejected when picking witnesses.
  bool allow_large_shifts = false;
  // Replace entries by their absolute values and map the witness back
  // (gcd is blind to entry signs).
  bool canonicalize_signs = false;
};

struct ShiftGcdResult {
  Integer d;             // the achieved gcd
  ShiftVector witness;   // gcd_vec(a + witness) == d, height(witness) <= H
  std::optional<double> exponent;  // log d / log H, present when H >= 2
};

namespace detail {

// Nearest shifts onto a multiple of d, one coordinate at a time. Entries are
// non-negative here. Returns nullopt when some coordinate cannot reach a
// multiple of d within the height bound, or when only the all-zero image can.
template <typename Int>
std::optional<std::vector<std::int64_t>> witness_for_divisor(
    const std::vector<Int>& a, const Int& d, std::int64_t height_limit) {
  const Int bound = Int(static_cast<std::uint64_t>(height_limit));
  std::vector<std::int64_t> shifts(a.size());
  std::vector<Int> residues(a.size());
  bool all_zero = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Int r = a[i] % d;
    residues[i] = r;
    const Int up = d - r;  // r == 0 gives up == d, never preferred over 0
    const bool down_ok = r <= bound;
    const bool up_ok = up <= bound;
    if (!down_ok && !up_ok) return std::nullopt;
    bool choose_down;
    if (down_ok && up_ok)
      choose_down = r <= up;  // smaller magnitude, ties toward the negative side
    else
      choose_down = down_ok;
    if (choose_down) {
      shifts[i] = -static_cast<std::int64_t>(static_cast<std::uint64_t>(r));
      if (a[i] != r) all_zero = false;
    } else {
      shifts[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(up));
      all_zero = false;  // a[i] - r + d >= d > 0
    }
  }
  if (all_zero) {
    // Every preferred choice landed on zero (possible only with large height
    // bounds). Re-aim one coordinate at the adjacent nonzero multiple.
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Int up = d - residues[i];
      if (up <= bound) {
        shifts[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(up));
        return shifts;
      }
      const Int far_down = residues[i] + d;
      if (far_down <= bound) {
        shifts[i] = -static_cast<std::int64_t>(static_cast<std::uint64_t>(far_down));
        return shifts;
      }
    }
    return std::nullopt;
  }
  return shifts;
}

template <typename Int>
std::pair<Integer, std::vector<std::int64_t>> scan_divisors(
    const std::vector<Int>& a, Int start, std::int64_t height_limit) {
  for (Int d = start; d >= 1; --d) {
    auto w = witness_for_divisor(a, d, height_limit);
    if (w) return {Integer(d), std::move(*w)};
    if (d == 1) break;
  }
  throw InternalError("max_shifted_gcd: divisor scan fell through");
}

}  // namespace detail

/// Largest d achievable as gcd(a + h) over shifts of height <= height_limit,
/// found by scanning candidate divisors downward from height(a) + H: d is
/// reachable iff every a_i sits within H of a multiple of d. Cost
/// O(n * (height(a) + H)).
inline ShiftGcdResult max_shifted_gcd(const IntVector& a, std::int64_t height_limit,
                                      ShiftSearchOptions opts = {}) {
  if (height_limit < 0)
    throw DomainError("max_shifted_gcd: height bound must be >= 0");
  if (a.all_zero())
    throw DomainError("max_shifted_gcd: the all-zero vector has no shifted gcd");

  std::vector<Integer> abs_entries;
  abs_entries.reserve(a.size());
  bool any_negative = false;
  for (const Integer& e : a) {
    if (e < 0) any_negative = true;
    abs_entries.push_back(boost::multiprecision::abs(e));
  }
  if (any_negative && !opts.canonicalize_signs)
    throw DomainError(
        "max_shifted_gcd: entries must be positive (canonicalize_signs overrides)");
  const Integer min_entry = *std::min_element(abs_entries.begin(), abs_entries.end());
  if (!opts.allow_large_shifts && min_entry <= height_limit)
    throw DomainError(
        "max_shifted_gcd: height bound must stay below the smallest entry "
        "(allow_large_shifts overrides)");

  Integer d;
  std::vector<std::int64_t> shifts;
  if (height_limit == 0) {
    // only h = 0 is available
    d = gcd_vec(a);
    shifts.assign(a.size(), 0);
  } else if (const Integer start = height(a) + height_limit;
             start <= Integer(std::uint64_t{1} << 62)) {
    std::vector<std::uint64_t> a64;
    a64.reserve(abs_entries.size());
    for (const Integer& e : abs_entries) a64.push_back(e.convert_to<std::uint64_t>());
    auto [dd, ss] = detail::scan_divisors(a64, start.convert_to<std::uint64_t>(),
                                          height_limit);
    d = std::move(dd);
    shifts = std::move(ss);
  } else {
    // linear in height(a) + H; beyond 64 bits this is correct but impractical
    auto [dd, ss] = detail::scan_divisors(abs_entries, height(a) + height_limit,
                                          height_limit);
    d = std::move(dd);
    shifts = std::move(ss);
  }

  if (opts.canonicalize_signs)
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] < 0) shifts[i] = -shifts[i];

  ShiftVector witness(std::move(shifts), height_limit);
  const IntVector image = shifted(a, witness);
  bool certified = !image.all_zero();
  for (const Integer& e : image) certified = certified && e % d == 0;
  certified = certified && gcd_vec(image) == d;
  if (!certified) throw InternalError("max_shifted_gcd: witness certificate failed");

  std::optional<double> exponent;
  if (height_limit >= 2)
    exponent = log_approx(d) / std::log(static_cast<double>(height_limit));
  return {std::move(d), std::move(witness), exponent};
}

/// Oracle: enumerate the whole shift cube. Skips shifts whose image is
/// all-zero; ties go to the first witness in lexicographic order.
inline ShiftGcdResult brute_force_shifted_gcd(
    const IntVector& a, std::int64_t height_limit,
    std::uint64_t enumeration_guard = 100'000'000) {
  if (height_limit < 0)
    throw DomainError("brute_force_shifted_gcd: height bound must be >= 0");
  if (a.all_zero())
    throw DomainError("brute_force_shifted_gcd: the all-zero vector has no shifted gcd");
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(height_limit) + 1;
  if (!power_within(side, static_cast<int>(a.size()), enumeration_guard))
    throw ResourceError(
        "brute_force_shifted_gcd: (2H+1)^n exceeds the enumeration guard");

  std::vector<std::int64_t> h(a.size(), -height_limit);
  Integer best = 0;
  std::vector<std::int64_t> best_shifts;
  std::vector<Integer> image(a.size());
  do {
    bool all_zero = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      image[i] = a[i] + h[i];
      if (image[i] != 0) all_zero = false;
    }
    if (all_zero) continue;
    Integer g = 0;
    for (const Integer& e : image) {
      g = boost::multiprecision::gcd(g, e);
      if (g == 1) break;
    }
    if (g > best) {
      best = g;
      best_shifts = h;
    }
  } while (next_tuple(h, -height_limit, height_limit));

  if (best == 0)
    throw InternalError("brute_force_shifted_gcd: no nonzero image found");
  ShiftVector witness(std::move(best_shifts), height_limit);
  std::optional<double> exponent;
  if (height_limit >= 2)
    exponent = log_approx(best) / std::log(static_cast<double>(height_limit));
  return {std::move(best), std::move(witness), exponent};
}

struct ExponentRecord {
  IntVector a;
  std::int64_t height_limit;
  Integer d;
  double exponent;
};

/// Seeded sweep: vectors with entries uniform in [scale/2, scale], shift
/// budget H = floor(scale^eps), exact solver per trial.
inline std::vector<ExponentRecord> exponent_experiment(int n, double epsilon,
                                                       std::int64_t height_scale,
                                                       int trials,
                                                       std::uint64_t seed) {
  if (n < 2) throw DomainError("exponent_experiment: n must be >= 2");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw DomainError("exponent_experiment: eps must lie in (0,1)");
  if (height_scale < 2) throw DomainError("exponent_experiment: scale must be >= 2");
  if (trials < 1) throw DomainError("exponent_experiment: trials must be >= 1");
  // the nudge keeps exact powers (e.g. 1e6^0.5) from rounding down
  const std::int64_t H = static_cast<std::int64_t>(
      std::floor(std::pow(static_cast<double>(height_scale), epsilon) + 1e-9));
  if (H < 2)
    throw DomainError("exponent_experiment: scale^eps must be >= 2");

  Rng rng(seed);
  const std::uint64_t lo = static_cast<std::uint64_t>(height_scale) / 2;
  const std::uint64_t hi = static_cast<std::uint64_t>(height_scale);
  std::vector<ExponentRecord> records;
  records.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    std::vector<Integer> entries;
    entries.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) entries.emplace_back(rng.uniform(lo, hi));
    IntVector a(std::move(entries));
    ShiftGcdResult res = max_shifted_gcd(a, H, {.allow_large_shifts = true});
    records.push_back({std::move(a), H, std::move(res.d), *res.exponent});
  }
  return records;
}

}  // namespace shiftgcd
