#pragma once

// Brute-force oracles used by the test suite.  Each one is implemented
// independently of the module it checks; the convexity validator is the only
// shared piece, as it defines the property itself.

#include <vector>

#include "extremal/algebra.hpp"
#include "extremal/rational.hpp"
#include "extremal/rootsys.hpp"
#include "extremal/wmodule.hpp"

namespace extremal::oracles {

/// Filters all permutations of the reduced positive system by the convexity
/// predicate.  Throws TooLargeError beyond 8 roots.
std::vector<std::vector<int>> permutation_orderings(const RootSystem& rs);

/// Exact Clebsch-Gordan table column by the classical two-term recursion on
/// the kernel of the raising operator, followed by lowering.  Entries are
/// (m1 index k1, sign, squared value) per magnetic number m.
struct CgOracleEntry {
  Rat m;      // magnetic number of the coupled state
  Rat m1;     // first factor magnetic number
  Rat m2;     // second factor magnetic number
  int sign;   // -1, 0, +1
  Rat value_sq;
};
std::vector<CgOracleEntry> cg_recursion(const Rat& j1, const Rat& j2, const Rat& j);

/// Checks every structure-table bracket as a matrix identity on the module.
bool module_bracket_check(const WeightModule& m, const StructureTable& t);

}  // namespace extremal::oracles
