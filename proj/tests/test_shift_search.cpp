#include "shiftgcd/shift_search.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace shiftgcd;

TEST_CASE("max_shifted_gcd worked examples") {
  auto r1 = max_shifted_gcd(IntVector{4, 6}, 1);
  CHECK(r1.d == 5);
  CHECK(r1.witness.entries() == std::vector<std::int64_t>{1, -1});

  auto r2 = max_shifted_gcd(IntVector{17, 17}, 0);
  CHECK(r2.d == 17);
  CHECK(r2.witness.entries() == std::vector<std::int64_t>{0, 0});

  auto r3 = max_shifted_gcd(IntVector{10, 16}, 3);
  CHECK(r3.d == 13);
  CHECK(r3.witness.entries() == std::vector<std::int64_t>{3, -3});
}

TEST_CASE("brute force oracle worked examples") {
  CHECK(brute_force_shifted_gcd(IntVector{4, 6}, 1).d == 5);
  CHECK(brute_force_shifted_gcd(IntVector{3, 5}, 0).d == 1);
  CHECK_THROWS_AS(brute_force_shifted_gcd(IntVector{5, 5, 5, 5, 5}, 100, 1000),
                  ResourceError);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(max_shifted_gcd(IntVector{4, 6}, -1), DomainError);
  CHECK_THROWS_AS(max_shifted_gcd(IntVector{0, 0}, 1), DomainError);
  CHECK_THROWS_AS(max_shifted_gcd(IntVector{-4, 6}, 1), DomainError);
  CHECK_THROWS_AS(max_shifted_gcd(IntVector{4, 6}, 4), DomainError);
  CHECK_NOTHROW(max_shifted_gcd(IntVector{4, 6}, 4, {.allow_large_shifts = true}));
}

TEST_CASE("sign canonicalization maps the witness back") {
  auto pos = max_shifted_gcd(IntVector{4, 6}, 1);
  auto neg = max_shifted_gcd(IntVector{-4, 6}, 1, {.canonicalize_signs = true});
  CHECK(neg.d == pos.d);
  CHECK(neg.witness[0] == -pos.witness[0]);
  CHECK(neg.witness[1] == pos.witness[1]);
  CHECK(gcd_vec(shifted(IntVector{-4, 6}, neg.witness)) == neg.d);
}

TEST_CASE("scan equals brute force on a dense 2d sweep") {
  for (std::int64_t a1 = 1; a1 <= 12; ++a1)
    for (std::int64_t a2 = 1; a2 <= 12; ++a2)
      for (std::int64_t H = 0; H <= 2; ++H) {
        const IntVector a{a1, a2};
        const auto exact = max_shifted_gcd(a, H, {.allow_large_shifts = true});
        const auto brute = brute_force_shifted_gcd(a, H);
        INFO("a=(" << a1 << "," << a2 << ") H=" << H);
        REQUIRE(exact.d == brute.d);
        for (const Integer& e : shifted(a, exact.witness)) REQUIRE(e % exact.d == 0);
      }
}

TEST_CASE("scan equals brute force on random n=3 instances") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<std::int64_t> entry(1, 40);
  for (int t = 0; t < 150; ++t) {
    const IntVector a{entry(gen), entry(gen), entry(gen)};
    const std::int64_t H = static_cast<std::int64_t>(gen() % 3);
    const auto exact = max_shifted_gcd(a, H, {.allow_large_shifts = true});
    const auto brute = brute_force_shifted_gcd(a, H);
    REQUIRE(exact.d == brute.d);
  }
}

TEST_CASE("result grows with the height budget") {
  std::mt19937 gen(11);
  std::uniform_int_distribution<std::int64_t> entry(20, 200);
  for (int t = 0; t < 50; ++t) {
    const IntVector a{entry(gen), entry(gen)};
    Integer prev = 0;
    for (std::int64_t H = 0; H <= 10; ++H) {
      const Integer d = max_shifted_gcd(a, H).d;
      REQUIRE(d >= prev);
      prev = d;
    }
  }
}

TEST_CASE("scaling: the witness survives multiplication through") {
  std::mt19937 gen(13);
  std::uniform_int_distribution<std::int64_t> entry(5, 60);
  for (int t = 0; t < 40; ++t) {
    const std::int64_t a1 = entry(gen), a2 = entry(gen), H = gen() % 4;
    for (std::int64_t c : {2, 3, 5}) {
      const Integer base = max_shifted_gcd(IntVector{a1, a2}, H,
                                           {.allow_large_shifts = true})
                               .d;
      const Integer scaled = max_shifted_gcd(IntVector{c * a1, c * a2}, c * H,
                                             {.allow_large_shifts = true})
                                 .d;
      REQUIRE(scaled >= c * base);
    }
  }
}

TEST_CASE("d is at least gcd(a) and at least 2H") {
  std::mt19937 gen(17);
  std::uniform_int_distribution<std::int64_t> entry(100, 2000);
  for (int t = 0; t < 60; ++t) {
    const IntVector a{entry(gen), entry(gen), entry(gen)};
    const std::int64_t H = 1 + static_cast<std::int64_t>(gen() % 40);  // < min/2
    const auto res = max_shifted_gcd(a, H);
    REQUIRE(res.d >= gcd_vec(a));
    REQUIRE(res.d >= 2 * H);
  }
}

TEST_CASE("huge entries resolve instantly at H = 0") {
  const Integer big("123456789012345678901234567890123456789");
  const IntVector a{big, big + 6};
  const auto res = max_shifted_gcd(a, 0);
  CHECK(res.d == boost::multiprecision::gcd(big, big + 6));
  CHECK(res.witness.entries() == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("the wide-integer scan matches the fixed-width scan") {
  std::mt19937 gen(19);
  for (int t = 0; t < 60; ++t) {
    const std::uint64_t a1 = 1 + gen() % 50, a2 = 1 + gen() % 50;
    const std::int64_t H = 1 + static_cast<std::int64_t>(gen() % 3);
    const std::vector<std::uint64_t> narrow{a1, a2};
    const std::vector<Integer> wide{Integer(a1), Integer(a2)};
    const auto start64 = std::max(a1, a2) + static_cast<std::uint64_t>(H);
    const auto [d64, s64] = detail::scan_divisors(narrow, start64, H);
    const auto [dw, sw] = detail::scan_divisors(wide, Integer(start64), H);
    REQUIRE(d64 == dw);
    REQUIRE(s64 == sw);
  }
}

TEST_CASE("exponent experiment is deterministic and floor-guaranteed") {
  const auto first = exponent_experiment(2, 0.5, 10'000, 8, 99);
  const auto second = exponent_experiment(2, 0.5, 10'000, 8, 99);
  REQUIRE(first.size() == 8);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].a == second[i].a);
    CHECK(first[i].d == second[i].d);
    CHECK(first[i].height_limit == 100);  // floor(10000^0.5)
    CHECK(first[i].d >= 2 * first[i].height_limit);
    CHECK(first[i].exponent >= 1.0);
  }
  const auto other = exponent_experiment(2, 0.5, 10'000, 8, 100);
  bool any_difference = false;
  for (std::size_t i = 0; i < other.size(); ++i)
    any_difference = any_difference || !(other[i].a == first[i].a);
  CHECK(any_difference);

  CHECK_THROWS_AS(exponent_experiment(1, 0.5, 10'000, 8, 1), DomainError);
  CHECK_THROWS_AS(exponent_experiment(2, 0.5, 2, 8, 1), DomainError);  // H < 2
}
