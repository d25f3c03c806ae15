#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "atomsum/common.hpp"

namespace atomsum {

/// A positive integer together with its prime factorization.
/// factors holds (prime, exponent) pairs with primes strictly increasing;
/// value 1 has an empty factor list.
struct FactoredInt {
  i64 value = 1;
  std::vector<std::pair<i64, int>> factors;
};

/// Exact fraction in lowest terms with positive denominator.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  Rational() = default;
  Rational(i64 n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(i64 n, i64 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i64 g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num = n;
    den = d;
  }

  bool operator==(const Rational&) const = default;

  Rational operator+(const Rational& o) const {
    __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
    __int128 d = static_cast<__int128>(den) * o.den;
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num = checked_narrow(n);
    r.den = checked_narrow(d);
    return r;
  }

  Rational operator*(const Rational& o) const {
    __int128 n = static_cast<__int128>(num) * o.num;
    __int128 d = static_cast<__int128>(den) * o.den;
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num = checked_narrow(n);
    r.den = checked_narrow(d);
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
};

/// Prime factorization by deterministic trial division up to sqrt(n).
/// n = 0 or negative is rejected.
FactoredInt factorize(i64 n);

/// All divisors of n in increasing order, including 1 and n.
std::vector<i64> divisors(const FactoredInt& n);

/// Moebius function: 0 if any exponent >= 2, else (-1)^(#prime factors).
int mobius(const FactoredInt& n);

/// Euler's totient, exact integer arithmetic.
i64 euler_phi(const FactoredInt& n);

/// Product of the distinct primes dividing n; radical(1) = 1.
i64 radical(const FactoredInt& n);

/// Largest divisor of m coprime to q (all primes shared with q stripped).
i64 coprime_part(const FactoredInt& m, i64 q);

/// Modified totient m * prod_{p|m, p|k}(1 - 1/p) * prod_{p|m, p∤k}(1 - 2/p).
/// k = 0 counts as divisible by every prime, so phi_star(m, 0) = phi(m).
/// Zero exactly when m is even and k is odd.
i64 phi_star(const FactoredInt& m, i64 k);

/// #{1 <= y <= n : gcd(d*y + r, n) = 1} = n * prod_{p|n, p∤d}(1 - 1/p).
/// Requires gcd(r, d) = 1; the result is always >= 1.
i64 f_count(i64 d, i64 r, const FactoredInt& n);

/// Double divisor sum over pairs with gcd(d, e) = k of mu(d)/d * mu(e)/e.
/// Closed form: 0 unless k | m and k squarefree, else
/// |mu(k)|/k^2 * prod_{p|m, p∤k}(1 - 2/p).
Rational t_sum(const FactoredInt& m, i64 k);

/// Evaluates sum_{d|m, e|m, lcm(d,e)=k} mu(d)*mu(e) by direct enumeration.
/// Equals mu(k); exists as a testable identity. Requires k | m.
int mobius_lcm_identity_check(const FactoredInt& m, i64 k);

/// phi_star(m, k) / m as an exact rational. Its defining divisor sum is
/// re-evaluated independently in the verification sweeps.
Rational q_sum(const FactoredInt& m, i64 k);

// Convenience forms that factorize internally.
i64 euler_phi(i64 n);
int mobius(i64 n);
i64 radical(i64 n);

}  // namespace atomsum
