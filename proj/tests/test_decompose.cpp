#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "atomsum/atoms.hpp"
#include "atomsum/decompose.hpp"
#include "atomsum/numtheory.hpp"
#include "atomsum/oracle.hpp"
#include "atomsum/repcount.hpp"

using namespace atomsum;

TEST_CASE("sumset_decompose pinned examples") {
  const AtomDecomposition d33 = sumset_decompose(60, 3, 3);
  CHECK(d33.g == 3);
  CHECK(d33.n_reduced == 20);
  CHECK(d33.coprime_part == 20);
  CHECK(d33.case_tag == ParityCase::B);
  CHECK(d33.leaders == std::vector<i64>{6, 12, 30, 60});

  const AtomDecomposition d310 = sumset_decompose(60, 3, 10);
  CHECK(d310.g == 1);
  CHECK(d310.coprime_part == 1);
  CHECK(d310.case_tag == ParityCase::A);
  CHECK(d310.leaders == std::vector<i64>{1});

  const AtomDecomposition d1010 = sumset_decompose(60, 10, 10);
  CHECK(d1010.g == 10);
  CHECK(d1010.coprime_part == 6);
  CHECK(d1010.case_tag == ParityCase::B);
  CHECK(d1010.leaders == std::vector<i64>{20, 60});

  CHECK_THROWS_AS(sumset_decompose(60, 7, 10), std::invalid_argument);
}

TEST_CASE("odd modulus with unit leaders saturates every divisor") {
  for (i64 n = 1; n <= 201; n += 2) {
    const AtomDecomposition dec = sumset_decompose(n, 1, 1);
    CHECK(dec.case_tag == ParityCase::A);
    CHECK(dec.leaders == divisors(factorize(n)));
  }
}

TEST_CASE("locate_sum pinned examples") {
  CHECK(locate_sum(60, 3, 10, 13) == 1);
  CHECK(locate_sum(60, 3, 3, 6) == 6);
  CHECK_FALSE(locate_sum(60, 3, 10, 14).has_value());
  // 0 = 3 + 57 lies in atom(3) + atom(3); the zero atom is coded by n.
  CHECK(locate_sum(60, 3, 3, 0) == 60);
  CHECK_FALSE(locate_sum(60, 3, 10, 0).has_value());
}

TEST_CASE("decomposition matches the enumerated sumset (small sweep)") {
  for (i64 n = 1; n <= 60; ++n) {
    const std::vector<i64> divs = divisors(factorize(n));
    for (i64 a : divs) {
      for (i64 b : divs) {
        const AtomDecomposition dec = sumset_decompose(n, a, b);

        CHECK(std::adjacent_find(dec.leaders.begin(), dec.leaders.end()) ==
              dec.leaders.end());
        std::vector<i64> joined;
        for (i64 leader : dec.leaders) {
          const AtomSet s = atom(n, leader % n);
          joined.insert(joined.end(), s.elements.begin(), s.elements.end());
        }
        std::sort(joined.begin(), joined.end());
        CHECK(joined == oracle::brute_force_sumset(n, a, b));

        if (dec.case_tag == ParityCase::B) {
          CHECK(dec.coprime_part % 2 == 0);
          for (i64 c : joined) CHECK((c / dec.g) % 2 == 0);
        }

        // Zero atom appears exactly when both reduced leaders are 1.
        const bool zero_named =
            std::binary_search(dec.leaders.begin(), dec.leaders.end(), n);
        CHECK(zero_named == (a == b));
        CHECK(zero_named == std::binary_search(joined.begin(), joined.end(), 0));
      }
    }
  }
}

TEST_CASE("larger moduli decomposition spot checks") {
  const struct {
    i64 n, a, b;
  } cases[] = {
      {720720, 6006, 2772},
      {720720, 360360, 240240},
      {524288, 4096, 8192},
      {510510, 2, 255255},
  };
  for (const auto& [n, a, b] : cases) {
    const AtomDecomposition dec = sumset_decompose(n, a, b);
    std::vector<i64> joined;
    for (i64 leader : dec.leaders) {
      const AtomSet s = atom(n, leader % n);
      joined.insert(joined.end(), s.elements.begin(), s.elements.end());
    }
    std::sort(joined.begin(), joined.end());
    CHECK(joined == oracle::brute_force_sumset(n, a, b));
    for (i64 c : {i64{0}, dec.leaders.front() % n}) {
      const std::optional<i64> leader = locate_sum(n, a, b, c);
      if (std::binary_search(joined.begin(), joined.end(), c)) {
        CHECK(leader == (c == 0 ? n : std::gcd(c, n)));
      } else {
        CHECK_FALSE(leader.has_value());
      }
    }
  }
}

TEST_CASE("locate_sum agrees with membership and gcd (small sweep)") {
  for (i64 n = 1; n <= 60; ++n) {
    const std::vector<i64> divs = divisors(factorize(n));
    for (i64 a : divs) {
      for (i64 b : divs) {
        for (i64 c = 0; c < n; ++c) {
          const std::optional<i64> leader = locate_sum(n, a, b, c);
          CHECK(leader.has_value() == in_sumset(n, a, b, c));
          if (leader) {
            CHECK(*leader == (c == 0 ? n : std::gcd(c, n)));
          }
        }
      }
    }
  }
}
