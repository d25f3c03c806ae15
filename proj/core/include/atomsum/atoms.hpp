#pragma once

#include <vector>

#include "atomsum/common.hpp"

namespace atomsum {

/// An ideal of Z_n named by its leader, the smallest positive divisor of n
/// generating it. leader = n encodes the zero ideal {0}, so that
/// "leader divides n" and "order = n / leader" hold uniformly.
struct DivisorIdeal {
  i64 n = 1;
  i64 leader = 1;

  i64 order() const { return n / leader; }
  i64 residue() const { return leader % n; }
  bool is_zero() const { return leader == n; }
  bool operator==(const DivisorIdeal&) const = default;
};

/// The set of all generators of one ideal of Z_n, materialized as a sorted
/// residue list. Every element e satisfies gcd(e, n) = leader (zero atom: {0}).
struct AtomSet {
  i64 n = 1;
  i64 leader = 1;
  std::vector<i64> elements;
};

/// Result of testing whether a residue set is an exact union of atoms.
/// When it is not, partial_leader names one atom only partially covered.
struct ClassifyResult {
  bool is_union = false;
  std::vector<i64> leaders;
  i64 partial_leader = 0;
};

/// The ideal generated by residue a; leader is gcd(a, n) for a != 0 and
/// n (the zero-ideal code) for a = 0.
DivisorIdeal ideal_of(i64 n, i64 a);

/// All generators of the ideal of a:
/// {leader * x mod n : 1 <= x <= n/leader, gcd(x, n/leader) = 1}.
AtomSet atom(i64 n, i64 a);

/// One atom per divisor of n in increasing leader order; together they
/// partition Z_n.
std::vector<AtomSet> atom_partition(i64 n);

/// Buckets S by gcd with n and compares bucket sizes against full atom
/// sizes phi(n/leader). Duplicate entries in s are ignored.
ClassifyResult classify(i64 n, const std::vector<i64>& s);

}  // namespace atomsum
