#pragma once

#include <string>
#include <vector>

#include "atomsum/common.hpp"

namespace atomsum::verify {

/// Exhaustive closed-form vs. brute-force comparison of the counting
/// function over all n <= n_max, all divisor pairs and all residues.
struct CountsSweep {
  i64 checked = 0;
  i64 count_mismatches = 0;      // closed form vs. enumeration
  i64 member_mismatches = 0;     // membership test vs. count > 0
  i64 constancy_violations = 0;  // count not constant on an atom
  i64 mass_mismatches = 0;       // counts summed over c vs. phi(n/a)*phi(n/b)
  i64 reduction_mismatches = 0;  // count changed by dividing out gcd(a, b)
  i64 symmetry_mismatches = 0;   // count(a, b) vs. count(b, a)
  std::vector<std::string> notes;

  i64 total_mismatches() const {
    return count_mismatches + member_mismatches + constancy_violations +
           mass_mismatches + reduction_mismatches + symmetry_mismatches;
  }
};

/// Sumset decompositions compared against brute-force sumsets, plus the
/// per-element atom location formula.
struct SumsetsSweep {
  i64 checked = 0;
  i64 set_mismatches = 0;     // union of named atoms vs. enumerated sumset
  i64 locate_mismatches = 0;  // located leader vs. gcd(c, n) / absence
  i64 parity_violations = 0;  // an odd element (after /g) in an even-case sumset
  i64 zero_mismatches = 0;    // zero atom present iff both reduced leaders are 1
  std::vector<std::string> notes;

  i64 total_mismatches() const {
    return set_mismatches + locate_mismatches + parity_violations + zero_mismatches;
  }
};

/// Atom-granular BFS compared against plain vertex BFS over a
/// deterministic sample of divisor sets.
struct LevelsSweep {
  i64 graphs = 0;
  i64 checked = 0;
  i64 level_mismatches = 0;         // vertex level vs. its atom's level
  i64 multiplicity_mismatches = 0;  // per-vertex edge counts vs. enumeration
  i64 closure_mismatches = 0;       // a BFS level that is not a union of atoms
  std::vector<std::string> notes;

  i64 total_mismatches() const {
    return level_mismatches + multiplicity_mismatches + closure_mismatches;
  }
};

/// The arithmetic-function identities re-evaluated from their defining
/// sums and counts.
struct LemmasSweep {
  i64 checked = 0;
  i64 phi_mismatches = 0;        // totient vs. direct coprime count
  i64 phi_star_mismatches = 0;   // product formula / multiplicativity
  i64 f_count_mismatches = 0;    // vs. direct count (includes >= 1 failures)
  i64 t_sum_mismatches = 0;      // vs. brute-force gcd-classed double sum
  i64 q_sum_mismatches = 0;      // vs. brute-force defining sum
  i64 mobius_lcm_mismatches = 0; // lcm-classed double sum vs. mobius
  std::vector<std::string> notes;

  i64 total_mismatches() const {
    return phi_mismatches + phi_star_mismatches + f_count_mismatches +
           t_sum_mismatches + q_sum_mismatches + mobius_lcm_mismatches;
  }
};

CountsSweep verify_counts(i64 n_max);
SumsetsSweep verify_sumsets(i64 n_max);
LevelsSweep verify_levels(i64 n_max, i64 min_graphs = 200);
LemmasSweep verify_lemmas(i64 m_max);

}  // namespace atomsum::verify
