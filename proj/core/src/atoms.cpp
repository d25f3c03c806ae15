#include "atomsum/atoms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "atomsum/numtheory.hpp"

namespace atomsum {

DivisorIdeal ideal_of(i64 n, i64 a) {
  if (n < 1) throw std::invalid_argument("ideal_of: n must be positive");
  if (a < 0 || a >= n) throw std::invalid_argument("ideal_of: residue out of range");
  return DivisorIdeal{n, a == 0 ? n : std::gcd(a, n)};
}

AtomSet atom(i64 n, i64 a) {
  const DivisorIdeal ideal = ideal_of(n, a);
  const i64 ord = ideal.order();
  AtomSet s{n, ideal.leader, {}};
  for (i64 x = 1; x <= ord; ++x) {
    if (std::gcd(x, ord) == 1) s.elements.push_back(ideal.leader * x % n);
  }
  // leader * x is increasing and only x = ord wraps (zero atom), so the
  // list is already sorted.
  return s;
}

std::vector<AtomSet> atom_partition(i64 n) {
  if (n < 1) throw std::invalid_argument("atom_partition: n must be positive");
  std::vector<AtomSet> atoms;
  for (i64 d : divisors(factorize(n))) atoms.push_back(atom(n, d % n));
  return atoms;
}

ClassifyResult classify(i64 n, const std::vector<i64>& s) {
  if (n < 1) throw std::invalid_argument("classify: n must be positive");
  std::map<i64, i64> bucket;  // leader -> distinct residues seen
  std::vector<i64> sorted(s);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (i64 e : sorted) {
    if (e < 0 || e >= n) throw std::invalid_argument("classify: element out of range");
    ++bucket[e == 0 ? n : std::gcd(e, n)];
  }
  ClassifyResult res;
  for (const auto& [leader, count] : bucket) {
    const i64 full = euler_phi(n / leader);
    if (count != full) {
      res.is_union = false;
      res.leaders.clear();
      res.partial_leader = leader;
      return res;
    }
    res.leaders.push_back(leader);
  }
  res.is_union = true;
  return res;
}

}  // namespace atomsum
