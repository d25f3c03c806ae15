#pragma once

#include <map>

#include "atomsum/common.hpp"

namespace atomsum {

/// A counting query divided through by g = gcd(a, b). The reduced leaders
/// a and b are coprime divisors of the reduced modulus n. valid is false
/// when g does not divide c, which forces the count to zero; c is only
/// meaningful when valid.
struct ReducedQuery {
  i64 g = 1;
  i64 n = 1;
  i64 a = 1;
  i64 b = 1;
  i64 c = 0;
  bool valid = true;
};

/// Why a representation count came out zero.
enum class ZeroReason {
  none,           // count > 0
  indivisible_c,  // g = gcd(a, b) does not divide c
  shared_factor,  // reduced c shares a prime with a * b (reduced)
  parity,         // reduced modulus even while reduced a*b*c odd
};

/// Every intermediate of the closed-form count. With m = n/(a*b) after
/// reduction, rad(m) splits as m1*m2*m3 with m1 | a, m2 | b and m3 coprime
/// to a*b; coprime_part is the largest divisor of m coprime to a*b, so
/// rad(coprime_part) = m3. count = (m/rad(m)) * phi(m1) * phi(m2) *
/// phi_star(m3, c) whenever it is nonzero.
struct RepCountBreakdown {
  ReducedQuery reduced;
  i64 m = 1;
  i64 m1 = 1;
  i64 m2 = 1;
  i64 m3 = 1;
  i64 coprime_part = 1;
  i64 count = 0;
  ZeroReason reason = ZeroReason::none;
};

/// Divide the query through by g = gcd(a, b). Requires a | n and b | n.
ReducedQuery reduce(i64 n, i64 a, i64 b, i64 c);

/// Exact number of ordered pairs (u, v) with u in the atom of a, v in the
/// atom of b and u + v = c in Z_n, with all intermediates populated.
RepCountBreakdown rep_count(i64 n, i64 a, i64 b, i64 c);

/// Whether c lies in the sumset of the two atoms: g | c, the reduced c is
/// coprime to the reduced a*b, and the reduced modulus is odd or the
/// reduced a*b*c even. Agrees with rep_count(...).count > 0 everywhere.
bool in_sumset(i64 n, i64 a, i64 b, i64 c);

/// One count per atom of Z_n, keyed by leader (zero atom keyed by n).
/// The count is constant across an atom, so a single representative
/// element per atom determines the whole map.
std::map<i64, i64> count_profile(i64 n, i64 a, i64 b);

}  // namespace atomsum
