#include "atomsum/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "atomsum/numtheory.hpp"
#include "atomsum/repcount.hpp"

namespace atomsum {

AtomDecomposition sumset_decompose(i64 n, i64 a, i64 b) {
  const ReducedQuery q = reduce(n, a, b, 0);
  AtomDecomposition dec;
  dec.n = n;
  dec.a = a;
  dec.b = b;
  dec.g = q.g;
  dec.n_reduced = q.n;

  const i64 ab = q.a * q.b;
  const i64 m = q.n / ab;
  dec.coprime_part = coprime_part(factorize(m), ab);

  const bool case_b = q.n % 2 == 0 && q.a % 2 == 1 && q.b % 2 == 1;
  dec.case_tag = case_b ? ParityCase::B : ParityCase::A;
  if (case_b && dec.coprime_part % 2 != 0) {
    // An even reduced modulus with odd reduced leaders forces an even
    // coprime part; anything else indicates a broken invariant upstream.
    throw std::logic_error("sumset_decompose: odd coprime part in even case");
  }

  for (i64 d : divisors(factorize(dec.coprime_part))) {
    if (!case_b || d % 2 == 0) dec.leaders.push_back(q.g * d);
  }
  std::sort(dec.leaders.begin(), dec.leaders.end());
  return dec;
}

std::optional<i64> locate_sum(i64 n, i64 a, i64 b, i64 c) {
  if (!in_sumset(n, a, b, c)) return std::nullopt;
  if (c == 0) return n;
  const ReducedQuery q = reduce(n, a, b, c);
  const i64 ab = q.a * q.b;
  const i64 part = coprime_part(factorize(q.n / ab), ab);
  return q.g * std::gcd(q.c, part);
}

}  // namespace atomsum
