#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <vector>

#include "atomsum/numtheory.hpp"
#include "atomsum/oracle.hpp"
#include "atomsum/repcount.hpp"

using namespace atomsum;

TEST_CASE("reduce") {
  const ReducedQuery q1 = reduce(60, 3, 10, 13);
  CHECK(q1.g == 1);
  CHECK(q1.valid);
  CHECK(q1.n == 60);
  CHECK(q1.a == 3);
  CHECK(q1.b == 10);
  CHECK(q1.c == 13);

  const ReducedQuery q2 = reduce(60, 6, 10, 3);
  CHECK(q2.g == 2);
  CHECK_FALSE(q2.valid);

  const ReducedQuery q3 = reduce(60, 6, 10, 8);
  CHECK(q3.valid);
  CHECK(q3.n == 30);
  CHECK(q3.a == 3);
  CHECK(q3.b == 5);
  CHECK(q3.c == 4);
  CHECK(std::gcd(q3.a, q3.b) == 1);

  CHECK_THROWS_AS(reduce(60, 7, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(reduce(60, 3, 8, 0), std::invalid_argument);
  CHECK_THROWS_AS(reduce(60, 3, 10, 60), std::invalid_argument);
  CHECK_THROWS_AS(reduce(60, 3, 10, -1), std::invalid_argument);
}

TEST_CASE("rep_count pinned examples") {
  const RepCountBreakdown hit = rep_count(60, 3, 10, 13);
  CHECK(hit.count == 1);
  CHECK(static_cast<i64>(oracle::brute_force_pairs(60, 3, 10, 13).size()) == 1);
  CHECK(hit.m == 2);
  CHECK(hit.m1 == 1);
  CHECK(hit.m2 == 2);
  CHECK(hit.m3 == 1);
  CHECK(hit.reason == ZeroReason::none);

  const RepCountBreakdown indivisible = rep_count(60, 6, 10, 3);
  CHECK(indivisible.count == 0);
  CHECK(indivisible.reason == ZeroReason::indivisible_c);

  const RepCountBreakdown parity = rep_count(8, 1, 1, 3);
  CHECK(parity.count == 0);
  CHECK(parity.reason == ZeroReason::parity);

  const RepCountBreakdown shared = rep_count(60, 3, 10, 14);
  CHECK(shared.count == 0);
  CHECK(shared.reason == ZeroReason::shared_factor);
}

TEST_CASE("unit-leader case collapses to the modified totient") {
  for (i64 n = 1; n <= 200; ++n) {
    const FactoredInt nf = factorize(n);
    for (i64 c = 0; c < n; ++c) {
      CHECK(rep_count(n, 1, 1, c).count == phi_star(nf, c));
    }
  }
}

TEST_CASE("in_sumset pinned examples") {
  CHECK(in_sumset(60, 3, 10, 13));
  CHECK_FALSE(in_sumset(60, 3, 10, 14));
  CHECK(oracle::brute_force_pairs(60, 3, 10, 14).empty());

  REQUIRE(oracle::brute_force_pairs(8, 1, 1, 4).size() == 4);
  CHECK(in_sumset(8, 1, 1, 4));
}

TEST_CASE("count_profile") {
  const std::map<i64, i64> profile = count_profile(60, 3, 10);
  for (const auto& [leader, count] : profile) {
    CHECK(count == (leader == 1 ? 1 : 0));
  }

  // Odd modulus, both leaders 1: every atom receives a positive count.
  for (i64 n : {3, 15, 45, 105}) {
    for (const auto& [leader, count] : count_profile(n, 1, 1)) {
      CHECK(count > 0);
    }
  }

  const std::map<i64, i64> trivial = count_profile(1, 1, 1);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.at(1) == 1);

  // Counts weighted by atom size account for every pair exactly once.
  for (i64 n : {24, 60, 90}) {
    for (i64 a : divisors(factorize(n))) {
      for (i64 b : divisors(factorize(n))) {
        i64 mass = 0;
        for (const auto& [leader, count] : count_profile(n, a, b)) {
          mass += count * euler_phi(n / leader);
        }
        CHECK(mass == euler_phi(n / a) * euler_phi(n / b));
      }
    }
  }
}

TEST_CASE("closed form agrees with enumeration everywhere (small sweep)") {
  for (i64 n = 1; n <= 60; ++n) {
    const std::vector<i64> divs = divisors(factorize(n));
    for (i64 a : divs) {
      for (i64 b : divs) {
        const std::vector<i64> expected = oracle::brute_force_counts(n, a, b);
        i64 mass = 0;
        for (i64 c = 0; c < n; ++c) {
          const i64 got = rep_count(n, a, b, c).count;
          CHECK(got == expected[c]);
          CHECK(in_sumset(n, a, b, c) == (got > 0));
          mass += got;
        }
        CHECK(mass == euler_phi(n / a) * euler_phi(n / b));
      }
    }
  }
}

TEST_CASE("count is constant on atoms and symmetric") {
  for (i64 n = 1; n <= 60; ++n) {
    const std::vector<i64> divs = divisors(factorize(n));
    for (i64 a : divs) {
      for (i64 b : divs) {
        std::map<i64, i64> per_leader;
        for (i64 c = 0; c < n; ++c) {
          const i64 got = rep_count(n, a, b, c).count;
          CHECK(got == rep_count(n, b, a, c).count);
          const i64 leader = c == 0 ? n : std::gcd(c, n);
          auto [it, inserted] = per_leader.try_emplace(leader, got);
          if (!inserted) CHECK(it->second == got);
        }
      }
    }
  }
}

TEST_CASE("larger moduli spot checks against enumeration") {
  // Divisor pairs chosen so the atoms stay small enough to enumerate.
  const struct {
    i64 n, a, b;
  } cases[] = {
      {720720, 6006, 2772},
      {720720, 720720 / 2, 720720 / 3},
      {999983, 1, 999983},  // prime modulus, unit atom against the zero atom
      {524288, 4096, 8192},
  };
  for (const auto& [n, a, b] : cases) {
    const std::vector<i64> expected = oracle::brute_force_counts(n, a, b);
    i64 mass = 0;
    for (i64 c = 0; c < n; ++c) {
      if (expected[c] != 0 || c % 97 == 0) {
        CHECK(rep_count(n, a, b, c).count == expected[c]);
      }
      mass += expected[c];
    }
    CHECK(mass == euler_phi(n / a) * euler_phi(n / b));
  }
}

TEST_CASE("reduction preserves the count") {
  for (i64 n = 1; n <= 60; ++n) {
    const std::vector<i64> divs = divisors(factorize(n));
    for (i64 a : divs) {
      for (i64 b : divs) {
        const i64 g = std::gcd(a, b);
        if (g == 1) continue;
        for (i64 c = 0; c < n; c += g) {
          CHECK(rep_count(n, a, b, c).count ==
                rep_count(n / g, a / g, b / g, c / g).count);
        }
      }
    }
  }
}
