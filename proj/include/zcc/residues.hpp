#pragma once

/**
 * @file residues.hpp
 * @brief k-th power residues over Z/p^m for k in {2, 3, 6}.
 *
 * A residue here is any value attained as x^k, units and zero divisors alike.
 * The occurrence of a nonzero residue u is |A^k_u| = #{x : x^k = u}.
 * Brute-force scans are the reference; the closed forms are checked against
 * them rather than trusted.
 */

#include <map>
#include <vector>

#include "zcc/modring.hpp"

namespace zcc {

/// A^k_u(n) = {x in Z/n : x^k = u}, ascending. The modulus is u's ring.
std::vector<u64> residue_set(unsigned k, const Residue& u);

/// Closed-form number of distinct k-th powers in Z/p^m, zero included.
/// k = 2 needs p odd; k in {3, 6} needs gcd(p, 6) = 1.
u64 residue_count(unsigned k, u64 p, unsigned m);

/// #{x^k mod n : x in Z/n} by scan.
u64 residue_count_brute(unsigned k, u64 n, unsigned workers = 1);

struct ResidueClassTable {
  u64 p;
  unsigned m;
  unsigned k;
  u64 modulus;
  /// occurrence -> number of nonzero residues with that occurrence.
  std::map<u64, u64> entries;
  /// Same tally restricted to residues that are units.
  std::map<u64, u64> unit_entries;
  /// |A^k_0|
  u64 zero_solutions;
  /// Conjectured occurrence of class [i], i = 1..floor((m-1)/k)+1.
  std::vector<u64> conjectured;
  /// Observed occurrences in ascending order (class [i] is the i-th).
  std::vector<u64> observed() const;
  bool conjecture_holds() const { return observed() == conjectured; }
};

/// Histogram of occurrences, k in {2, 3}. The scan over x is split across workers.
ResidueClassTable occurrence_classes(unsigned k, u64 p, unsigned m, unsigned workers = 1);

/// |A^k_0(p^m)|: p^floor(m/2) for k = 2, p^floor(2m/3) for k = 3.
u64 zero_solution_count(unsigned k, u64 p, unsigned m);

/// Multiplicative extension of zero_solution_count over the factorization of n.
u64 zero_solution_count(unsigned k, u64 n);

/// #{x in Z/n : x^k = 0} by scan.
u64 zero_solution_count_brute(unsigned k, u64 n);

}  // namespace zcc
