#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "atomsum/atoms.hpp"
#include "atomsum/numtheory.hpp"

using namespace atomsum;

TEST_CASE("ideal_of") {
  CHECK(ideal_of(60, 9).leader == 3);
  CHECK(ideal_of(60, 0).leader == 60);
  CHECK(ideal_of(60, 0).is_zero());
  CHECK(ideal_of(12, 8).leader == 4);
  CHECK(ideal_of(12, 8).order() == 3);
  CHECK(ideal_of(60, 0).residue() == 0);
  CHECK_THROWS_AS(ideal_of(60, 60), std::invalid_argument);
  CHECK_THROWS_AS(ideal_of(60, -1), std::invalid_argument);
  CHECK_THROWS_AS(ideal_of(0, 0), std::invalid_argument);
}

TEST_CASE("atom pinned sets") {
  CHECK(atom(60, 3).elements == std::vector<i64>{3, 9, 21, 27, 33, 39, 51, 57});
  CHECK(atom(60, 10).elements == std::vector<i64>{10, 50});
  CHECK(atom(60, 20).elements == std::vector<i64>{20, 40});
  CHECK(atom(60, 30).elements == std::vector<i64>{30});
  for (i64 n : {1, 2, 7, 60}) {
    CHECK(atom(n, 0).elements == std::vector<i64>{0});
    CHECK(atom(n, 0).leader == n);
  }
  CHECK_THROWS_AS(atom(7, 13), std::invalid_argument);
}

TEST_CASE("atom generator enumeration matches unit multiples") {
  // The canonical enumeration must produce the same set as multiplying a
  // by every unit of Z_n, with no residue produced twice.
  for (i64 n = 1; n <= 300; ++n) {
    for (i64 a = 0; a < n; ++a) {
      const AtomSet s = atom(n, a);
      std::set<i64> via_units;
      for (i64 u = 1; u <= n; ++u) {
        if (std::gcd(u, n) == 1) via_units.insert(a * u % n);
      }
      if (a == 0) via_units = {0};
      CHECK(std::set<i64>(s.elements.begin(), s.elements.end()) == via_units);
      CHECK(s.elements.size() == via_units.size());  // no duplicates
      CHECK(std::is_sorted(s.elements.begin(), s.elements.end()));
      CHECK(static_cast<i64>(s.elements.size()) == euler_phi(n / s.leader));
      for (i64 e : s.elements) {
        CHECK((e == 0 ? n : std::gcd(e, n)) == s.leader);
      }
    }
  }
}

TEST_CASE("atom_partition") {
  REQUIRE(atom_partition(1).size() == 1);
  CHECK(atom_partition(1)[0].elements == std::vector<i64>{0});

  const std::vector<AtomSet> parts6 = atom_partition(6);
  REQUIRE(parts6.size() == 4);
  CHECK(parts6[0].leader == 1);
  CHECK(parts6[0].elements == std::vector<i64>{1, 5});
  CHECK(parts6[1].elements == std::vector<i64>{2, 4});
  CHECK(parts6[2].elements == std::vector<i64>{3});
  CHECK(parts6[3].elements == std::vector<i64>{0});

  const std::vector<AtomSet> parts60 = atom_partition(60);
  CHECK(parts60.size() == 12);
  i64 total = 0;
  for (const AtomSet& s : parts60) total += static_cast<i64>(s.elements.size());
  CHECK(total == 60);
}

TEST_CASE("atom_partition covers Z_n exactly once") {
  for (i64 n = 1; n <= 300; ++n) {
    std::vector<char> seen(n, 0);
    for (const AtomSet& s : atom_partition(n)) {
      for (i64 e : s.elements) {
        CHECK(seen[e] == 0);
        seen[e] = 1;
      }
    }
    CHECK(std::count(seen.begin(), seen.end(), 1) == n);
  }
}

TEST_CASE("classify") {
  std::vector<i64> both = atom(60, 3).elements;
  const std::vector<i64> ten = atom(60, 10).elements;
  both.insert(both.end(), ten.begin(), ten.end());
  const ClassifyResult joined = classify(60, both);
  CHECK(joined.is_union);
  CHECK(joined.leaders == std::vector<i64>{3, 10});

  const ClassifyResult partial = classify(6, {1});
  CHECK_FALSE(partial.is_union);
  CHECK(partial.partial_leader == 1);

  const ClassifyResult empty = classify(6, {});
  CHECK(empty.is_union);
  CHECK(empty.leaders.empty());

  CHECK_THROWS_AS(classify(6, {6}), std::invalid_argument);
}

TEST_CASE("classify recovers random atom unions") {
  std::mt19937 rng(7u);
  for (int iter = 0; iter < 200; ++iter) {
    const i64 n = 1 + static_cast<i64>(rng() % 240);
    std::vector<i64> chosen;
    std::vector<i64> residues;
    for (const AtomSet& s : atom_partition(n)) {
      if (rng() % 2 == 0) continue;
      chosen.push_back(s.leader);
      residues.insert(residues.end(), s.elements.begin(), s.elements.end());
    }
    std::shuffle(residues.begin(), residues.end(), rng);
    const ClassifyResult res = classify(n, residues);
    CHECK(res.is_union);
    CHECK(res.leaders == chosen);
  }
}
