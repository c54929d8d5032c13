#include "shiftgcd/coprime.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace shiftgcd;

namespace {
bool pairwise_coprime_check(const IntVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (boost::multiprecision::gcd(v[i], v[j]) != 1) return false;
  return true;
}
}  // namespace

TEST_CASE("greedy_coprime worked examples") {
  const auto r1 = greedy_coprime(IntVector{4, 6, 9});
  CHECK(r1.shifts.entries() == std::vector<std::int64_t>{0, 1, 0});
  CHECK(r1.shifted_vector == IntVector{4, 7, 9});
  CHECK(r1.height_used == 1);

  const auto r2 = greedy_coprime(IntVector{2, 3, 5});
  CHECK(r2.shifts.entries() == std::vector<std::int64_t>{0, 0, 0});
  CHECK(r2.height_used == 0);

  const auto r3 = greedy_coprime(IntVector{2, 4});
  CHECK(r3.shifts.entries() == std::vector<std::int64_t>{0, 1});
  CHECK(r3.shifted_vector == IntVector{2, 5});
}

TEST_CASE("greedy_coprime validation and determinism") {
  CHECK_THROWS_AS(greedy_coprime(IntVector{5}), DomainError);
  CHECK_THROWS_AS(greedy_coprime(IntVector{4, -6}), DomainError);
  CHECK_THROWS_AS(greedy_coprime(IntVector{4, 0}), DomainError);
  const IntVector a{840, 1260, 924, 330};
  CHECK(greedy_coprime(a).shifts == greedy_coprime(a).shifts);
}

TEST_CASE("greedy output is always pairwise coprime") {
  std::mt19937 gen(23);
  std::uniform_int_distribution<std::int64_t> entry(1, 100000);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + gen() % 5;
    std::vector<Integer> v(n);
    for (auto& e : v) e = entry(gen);
    const auto res = greedy_coprime(IntVector(v));
    REQUIRE(pairwise_coprime_check(res.shifted_vector));
    REQUIRE(res.height_used == res.shifts.height());
    for (std::int64_t s : res.shifts.entries()) REQUIRE(s >= 0);  // one-sided
    REQUIRE(res.shifts[0] == 0);
  }
}

TEST_CASE("l_exact worked examples") {
  CHECK(l_exact(IntVector{2, 3, 5}) == 0);
  CHECK(l_exact(IntVector{2, 4}) == 1);
  CHECK(l_exact(IntVector{6, 10, 15}) == 1);
  CHECK_THROWS_AS(l_exact(IntVector{6}), DomainError);
}

TEST_CASE("ell_exact worked examples") {
  CHECK(ell_exact(IntVector{3, 5}) == 0);
  CHECK(ell_exact(IntVector{4, 6}) == 1);
  CHECK_THROWS_AS(ell_exact(IntVector{6}), DomainError);
}

TEST_CASE("guard exhaustion raises a resource error naming the last level") {
  try {
    l_exact(IntVector{2, 4}, 1);
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("height <= 0") != std::string::npos);
  }
}

TEST_CASE("zero heights characterize already-coprime inputs") {
  std::mt19937 gen(29);
  std::uniform_int_distribution<std::int64_t> entry(-30, 30);
  for (int t = 0; t < 150; ++t) {
    std::vector<Integer> v(2 + gen() % 2);
    for (auto& e : v) e = entry(gen);
    const IntVector a(v);
    CHECK((l_exact(a) == 0) == pairwise_coprime_check(a));
    CHECK((ell_exact(a) == 0) == (gcd_vec(a) == 1));
    CHECK(ell_exact(a) <= l_exact(a));
  }
}

TEST_CASE("the greedy witness upper-bounds the two-sided optimum (n=2)") {
  std::mt19937 gen(31);
  std::uniform_int_distribution<std::int64_t> entry(1, 500);
  for (int t = 0; t < 100; ++t) {
    const IntVector a{entry(gen), entry(gen)};
    CHECK(l_exact(a) <= greedy_coprime(a).height_used);
  }
}

TEST_CASE("audit: certificates, ratio, and per-step Jacobsthal cross-check") {
  const auto rows = greedy_bound_audit(60, 4, 2000, 12345);
  REQUIRE(rows.size() == 60);
  int checked = 0;
  for (const auto& row : rows) {
    std::vector<Integer> image;
    for (std::size_t i = 0; i < row.a.size(); ++i)
      image.push_back(row.a[i] + row.shifts[i]);
    REQUIRE(pairwise_coprime_check(IntVector(image)));
    REQUIRE(row.steps_within_jacobsthal == row.steps_checked);
    REQUIRE(row.ratio >= 0.0);
    REQUIRE(std::isfinite(row.ratio));
    checked += row.steps_checked;
  }
  CHECK(checked > 0);  // small magnitudes keep products inside the sieve cap

  CHECK_THROWS_AS(greedy_bound_audit(5, 1, 2000, 1), DomainError);
  CHECK_THROWS_AS(greedy_bound_audit(5, 3, 10, 1), DomainError);
  CHECK_THROWS_AS(greedy_bound_audit(0, 3, 2000, 1), DomainError);
}
