#include "atomsum/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace atomsum {

FactoredInt factorize(i64 n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  FactoredInt f;
  f.value = n;
  i64 rest = n;
  auto strip = [&](i64 p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) f.factors.emplace_back(p, e);
  };
  strip(2);
  for (i64 p = 3; p <= rest / p; p += 2) strip(p);
  if (rest > 1) f.factors.emplace_back(rest, 1);
  return f;
}

std::vector<i64> divisors(const FactoredInt& n) {
  std::vector<i64> divs{1};
  for (const auto& [p, e] : n.factors) {
    const std::size_t base = divs.size();
    i64 pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

int mobius(const FactoredInt& n) {
  for (const auto& [p, e] : n.factors) {
    if (e >= 2) return 0;
  }
  return n.factors.size() % 2 == 0 ? 1 : -1;
}

i64 euler_phi(const FactoredInt& n) {
  i64 res = n.value;
  for (const auto& [p, e] : n.factors) res = res / p * (p - 1);
  return res;
}

i64 radical(const FactoredInt& n) {
  i64 r = 1;
  for (const auto& [p, e] : n.factors) r *= p;
  return r;
}

i64 coprime_part(const FactoredInt& m, i64 q) {
  i64 res = m.value;
  for (const auto& [p, e] : m.factors) {
    if (q % p == 0) {
      for (int i = 0; i < e; ++i) res /= p;
    }
  }
  return res;
}

i64 phi_star(const FactoredInt& m, i64 k) {
  if (k < 0) throw std::invalid_argument("phi_star: k must be >= 0");
  i64 res = m.value;
  for (const auto& [p, e] : m.factors) {
    // k % p == 0 covers k = 0: every prime divides zero.
    res = res / p * (k % p == 0 ? p - 1 : p - 2);
  }
  return res;
}

i64 f_count(i64 d, i64 r, const FactoredInt& n) {
  if (d < 1 || r < 1) throw std::invalid_argument("f_count: d, r must be positive");
  if (std::gcd(r, d) != 1) throw std::invalid_argument("f_count: requires gcd(r, d) = 1");
  i64 res = n.value;
  for (const auto& [p, e] : n.factors) {
    if (d % p != 0) res = res / p * (p - 1);
  }
  return res;
}

Rational t_sum(const FactoredInt& m, i64 k) {
  if (k < 1) throw std::invalid_argument("t_sum: k must be positive");
  if (m.value % k != 0) return Rational(0);
  if (mobius(factorize(k)) == 0) return Rational(0);
  i64 num = 1;
  i64 den = checked_mul(k, k);
  for (const auto& [p, e] : m.factors) {
    if (k % p != 0) {
      num = checked_mul(num, p - 2);
      den = checked_mul(den, p);
    }
  }
  return Rational(num, den);
}

int mobius_lcm_identity_check(const FactoredInt& m, i64 k) {
  if (k < 1 || m.value % k != 0) {
    throw std::invalid_argument("mobius_lcm_identity_check: requires k | m");
  }
  const std::vector<i64> divs = divisors(m);
  // mu per divisor, read off m's prime list instead of refactoring each one.
  std::vector<int> mu(divs.size());
  for (std::size_t i = 0; i < divs.size(); ++i) {
    i64 d = divs[i];
    int parity = 0;
    bool squarefree = true;
    for (const auto& [p, e] : m.factors) {
      int v = 0;
      while (d % p == 0) {
        d /= p;
        ++v;
      }
      if (v >= 2) squarefree = false;
      if (v == 1) ++parity;
    }
    mu[i] = squarefree ? (parity % 2 == 0 ? 1 : -1) : 0;
  }
  i64 sum = 0;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    if (mu[i] == 0) continue;
    for (std::size_t j = 0; j < divs.size(); ++j) {
      if (mu[j] == 0) continue;
      i64 g = std::gcd(divs[i], divs[j]);
      if (divs[i] / g * divs[j] == k) {  // lcm of two divisors of m divides m
        sum += mu[i] * mu[j];
      }
    }
  }
  return static_cast<int>(sum);
}

Rational q_sum(const FactoredInt& m, i64 k) {
  return Rational(phi_star(m, k), m.value);
}

i64 euler_phi(i64 n) { return euler_phi(factorize(n)); }
int mobius(i64 n) { return mobius(factorize(n)); }
i64 radical(i64 n) { return radical(factorize(n)); }

}  // namespace atomsum
