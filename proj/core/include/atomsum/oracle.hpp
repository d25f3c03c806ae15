#pragma once

#include <vector>

#include "atomsum/common.hpp"

namespace atomsum::oracle {

/// One representation c = u + v with u in the atom of a and v in the atom
/// of b, for the query that produced it.
struct RepPair {
  i64 u = 0;
  i64 v = 0;
  bool operator==(const RepPair&) const = default;
};

/// Enumerates every representation by definition: x over [1, n/a] coprime
/// to n/a, y over [1, n/b] coprime to n/b, keeping pairs with
/// a*x + b*y = c (mod n). Order is lexicographic in (x, y). Verification
/// only; never consults the closed-form modules.
std::vector<RepPair> brute_force_pairs(i64 n, i64 a, i64 b, i64 c);

/// Representation counts for every c in [0, n) from one enumeration pass.
std::vector<i64> brute_force_counts(i64 n, i64 a, i64 b);

/// The sumset atom(a) + atom(b) as a sorted, deduplicated residue list.
std::vector<i64> brute_force_sumset(i64 n, i64 a, i64 b);

/// Plain vertex-level BFS distance from vertex 0 in the graph on Z_n with
/// x ~ y iff gcd(x - y, n) lies in d. Unreached vertices get -1.
std::vector<i64> vertex_bfs_distances(i64 n, const std::vector<i64>& d);

}  // namespace atomsum::oracle
