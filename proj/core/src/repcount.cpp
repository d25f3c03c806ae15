#include "atomsum/repcount.hpp"

#include <numeric>
#include <stdexcept>

#include "atomsum/numtheory.hpp"

namespace atomsum {

namespace {

void check_query(i64 n, i64 a, i64 b, i64 c) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (a < 1 || n % a != 0) throw std::invalid_argument("a must be a divisor of n");
  if (b < 1 || n % b != 0) throw std::invalid_argument("b must be a divisor of n");
  if (c < 0 || c >= n) throw std::invalid_argument("c must be a residue in [0, n)");
}

}  // namespace

ReducedQuery reduce(i64 n, i64 a, i64 b, i64 c) {
  check_query(n, a, b, c);
  const i64 g = std::gcd(a, b);
  ReducedQuery q;
  q.g = g;
  q.n = n / g;
  q.a = a / g;
  q.b = b / g;
  q.valid = c % g == 0;
  q.c = q.valid ? c / g : 0;
  return q;
}

RepCountBreakdown rep_count(i64 n, i64 a, i64 b, i64 c) {
  RepCountBreakdown bd;
  bd.reduced = reduce(n, a, b, c);
  const ReducedQuery& q = bd.reduced;

  // a and b are coprime divisors of the reduced n, so their product is too.
  const i64 ab = q.a * q.b;
  bd.m = q.n / ab;
  const FactoredInt mf = factorize(bd.m);
  for (const auto& [p, e] : mf.factors) {
    if (q.a % p == 0) {
      bd.m1 *= p;
    } else if (q.b % p == 0) {
      bd.m2 *= p;
    } else {
      bd.m3 *= p;
    }
  }
  bd.coprime_part = coprime_part(mf, ab);

  if (!q.valid) {
    bd.reason = ZeroReason::indivisible_c;
    return bd;
  }
  if (std::gcd(q.c, ab) > 1) {
    bd.reason = ZeroReason::shared_factor;
    return bd;
  }

  i64 count = bd.m / (bd.m1 * bd.m2 * bd.m3);
  for (const auto& [p, e] : mf.factors) {
    if (q.a % p == 0 || q.b % p == 0) {
      count *= p - 1;
    } else {
      count *= q.c % p == 0 ? p - 1 : p - 2;  // phi_star factor over m3
    }
  }
  bd.count = count;
  bd.reason = count == 0 ? ZeroReason::parity : ZeroReason::none;
  return bd;
}

bool in_sumset(i64 n, i64 a, i64 b, i64 c) {
  const ReducedQuery q = reduce(n, a, b, c);
  if (!q.valid) return false;
  if (std::gcd(q.c, q.a * q.b) > 1) return false;
  // Parity: reduced modulus odd, or the product a*b*c reduced is even.
  return q.n % 2 == 1 || q.a % 2 == 0 || q.b % 2 == 0 || q.c % 2 == 0;
}

std::map<i64, i64> count_profile(i64 n, i64 a, i64 b) {
  check_query(n, a, b, 0);
  std::map<i64, i64> profile;
  for (i64 d : divisors(factorize(n))) {
    profile[d] = rep_count(n, a, b, d % n).count;
  }
  return profile;
}

}  // namespace atomsum
