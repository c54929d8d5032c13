#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shiftgcd {

using Integer = boost::multiprecision::cpp_int;

// Error taxonomy shared with the CLI exit-code contract:
//   DomainError -> exit 2, ResourceError -> exit 3, InternalError -> exit 1.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Immutable sequence of n >= 1 unbounded integers.
class IntVector {
 public:
  explicit IntVector(std::vector<Integer> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("IntVector: at least one entry required");
  }
  IntVector(std::initializer_list<Integer> entries)
      : IntVector(std::vector<Integer>(entries)) {}

  std::size_t size() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Integer>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool all_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Integer& e) { return e == 0; });
  }
  bool all_positive() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Integer& e) { return e > 0; });
  }

  // "4,6,-7" -> (4, 6, -7)
  static IntVector parse(std::string_view csv);

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const Integer& e : entries_) out.push_back(e.str());
    return out;
  }

  friend bool operator==(const IntVector&, const IntVector&) = default;

 private:
  std::vector<Integer> entries_;
};

/// Additive perturbation of bounded height: max |h_i| <= height_bound.
class ShiftVector {
 public:
  ShiftVector(std::vector<std::int64_t> entries, std::int64_t height_bound)
      : entries_(std::move(entries)), height_bound_(height_bound) {
    if (entries_.empty()) throw DomainError("ShiftVector: at least one entry required");
    if (height_bound_ < 0) throw DomainError("ShiftVector: height bound must be >= 0");
    if (height() > height_bound_)
      throw DomainError("ShiftVector: entry exceeds the height bound");
  }

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::int64_t height_bound() const { return height_bound_; }

  std::int64_t height() const {
    std::int64_t m = 0;
    for (std::int64_t h : entries_) m = std::max(m, h < 0 ? -h : h);
    return m;
  }

  friend bool operator==(const ShiftVector&, const ShiftVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
  std::int64_t height_bound_;
};

inline IntVector shifted(const IntVector& a, const ShiftVector& h) {
  if (a.size() != h.size()) throw DomainError("shifted: length mismatch");
  std::vector<Integer> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + h[i]);
  return IntVector(std::move(out));
}

/// Seeded deterministic 64-bit generator; all experiment sampling goes
/// through this so identical seeds give identical documents.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // uniform in [lo, hi], inclusive; rejection sampling, no modulo bias
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw DomainError("Rng::uniform: empty range");
    std::uint64_t range = hi - lo;
    if (range == std::numeric_limits<std::uint64_t>::max()) return next();
    ++range;
    const std::uint64_t reject_above =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= reject_above);
    return lo + x % range;
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

inline std::size_t bit_length(const Integer& x) {
  if (x <= 0) throw DomainError("bit_length: positive argument required");
  return boost::multiprecision::msb(x) + 1;
}

/// Natural log of a positive Integer, usable far beyond double range.
inline double log_approx(const Integer& x) {
  if (x <= 0) throw DomainError("log_approx: positive argument required");
  const std::size_t bits = bit_length(x);
  if (bits <= 960) return std::log(x.convert_to<double>());
  const Integer top = x >> (bits - 64);
  return std::log(top.convert_to<double>()) +
         static_cast<double>(bits - 64) * std::numbers::ln2;
}

// base^exp if it stays <= limit, nullopt otherwise (overflow-safe)
inline std::optional<std::uint64_t> power_within(std::uint64_t base, int exp,
                                                 std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && acc > limit / base) return std::nullopt;
    acc *= base;
    if (acc > limit) return std::nullopt;
  }
  return acc;
}

// Odometer over [lo, hi]^n in lexicographic order (last coordinate fastest).
// Returns false once the last tuple has been passed.
inline bool next_tuple(std::vector<std::int64_t>& t, std::int64_t lo, std::int64_t hi) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] < hi) {
      ++t[i];
      std::fill(t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end(), lo);
      return true;
    }
  }
  return false;
}

namespace detail {
inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline Integer parse_integer(std::string_view token) {
  token = trim(token);
  if (token.empty()) throw DomainError("parse: empty integer token");
  std::string_view body = token;
  if (body.front() == '+' || body.front() == '-') body.remove_prefix(1);
  if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) {
        return c >= '0' && c <= '9';
      }))
    throw DomainError("parse: bad integer token '" + std::string(token) + "'");
  std::string digits(token);
  if (digits.front() == '+') digits.erase(0, 1);  // cpp_int rejects a leading '+'
  return Integer(digits);
}
}  // namespace detail

inline IntVector IntVector::parse(std::string_view csv) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    const std::string_view token =
        csv.substr(start, comma == std::string_view::npos ? comma : comma - start);
    out.push_back(detail::parse_integer(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntVector(std::move(out));
}

}  // namespace shiftgcd
