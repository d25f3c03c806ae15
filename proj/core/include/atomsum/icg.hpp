#pragma once

#include <map>
#include <string>
#include <vector>

#include "atomsum/common.hpp"

namespace atomsum::icg {

/// Circulant graph on Z_n whose symbol is the union of the atoms with
/// leaders in divisor_set (proper divisors of n). Adjacency is evaluated
/// from gcds on demand; no adjacency structure is materialized.
struct ICGraph {
  i64 n = 1;
  std::vector<i64> divisor_set;  // sorted, each d | n, d < n
};

/// One BFS level at atom granularity. leaders are the atoms first reached
/// at this level. multiplicities records, for every atom touched while
/// expanding the previous level, in how many distinct pairwise atom
/// sumsets it appeared (so re-touched atoms, the zero atom in particular,
/// show up here without re-entering leaders). edge_counts records for the
/// same atoms how many edges arrive from the previous level at each of
/// their vertices.
struct Level {
  i64 index = 0;
  std::vector<i64> leaders;
  std::map<i64, i64> multiplicities;
  std::map<i64, i64> edge_counts;
};

/// Full exploration of an ICGraph from vertex 0 at atom granularity.
struct LevelReport {
  i64 n = 1;
  std::vector<i64> divisor_set;
  std::vector<Level> levels;
  std::vector<i64> unreachable;  // leaders never reached (disconnected graph)
};

/// Divisor sets of a distance power. cumulative joins the leaders of
/// levels 1..r (the graph below is built on it); level_exact is the
/// leaders of level r alone, empty when r exceeds the last level.
struct DistancePower {
  ICGraph graph;
  std::vector<i64> cumulative;
  std::vector<i64> level_exact;
};

enum class ExportFormat { edge_list, dot, summary };

/// Build ICG(n, d). Each divisor must divide n and be < n (no loops);
/// d must be nonempty and duplicate-free.
ICGraph build(i64 n, std::vector<i64> d);

/// x ~ y iff gcd(x - y mod n, n) lies in the divisor set. Irreflexive.
bool adjacency(const ICGraph& g, i64 x, i64 y);

/// Common degree of every vertex: sum of phi(n/d) over the divisor set.
i64 degree(const ICGraph& g);

/// The symbol set: all residues whose gcd with n lies in the divisor set.
std::vector<i64> symbol(const ICGraph& g);

/// BFS from vertex 0 carried out on atoms instead of vertices: each
/// frontier atom is added to each symbol atom, the sumset decomposed into
/// atoms, and newly reached atoms become the next frontier. Terminates
/// when a frontier expansion reaches nothing new; atoms never reached are
/// reported unreachable.
LevelReport distance_levels(const ICGraph& g);

/// Graph joining vertices at distance 1..r, plus both divisor-set views.
DistancePower distance_power(const ICGraph& g, i64 r);

/// Deterministic serialization. Edge list: "u v" per line, u < v,
/// lexicographic. DOT: undirected, nodes 0..n-1, one statement per edge.
/// Summary: JSON object with n, D and degree. Edge list and DOT are
/// capped at n <= 10^4.
std::string export_graph(const ICGraph& g, ExportFormat format);

}  // namespace atomsum::icg
