#pragma once

#include <optional>
#include <vector>

#include "atomsum/common.hpp"

namespace atomsum {

/// Which divisor family of the coprime part names the sumset atoms:
/// case A (reduced modulus odd, or reduced a*b even) takes every divisor,
/// case B (reduced modulus even, reduced a*b odd) only the even ones.
enum class ParityCase { A, B };

/// The sumset of the atoms of a and b in Z_n, expressed as a disjoint
/// union of atoms. leaders are already scaled back into Z_n (multiplied
/// by g); g * n_reduced = n encodes the zero atom.
struct AtomDecomposition {
  i64 n = 1;
  i64 a = 1;
  i64 b = 1;
  i64 g = 1;
  i64 n_reduced = 1;
  i64 coprime_part = 1;
  ParityCase case_tag = ParityCase::A;
  std::vector<i64> leaders;
};

/// Decompose atom(a) + atom(b) into atoms of Z_n. Requires a | n, b | n.
AtomDecomposition sumset_decompose(i64 n, i64 a, i64 b);

/// Leader of the unique atom of Z_n containing c, provided c lies in the
/// sumset; absent otherwise. c = 0 maps to the zero-atom code n rather
/// than a gcd with zero.
std::optional<i64> locate_sum(i64 n, i64 a, i64 b, i64 c);

}  // namespace atomsum
