#pragma once

#include <vector>

#include "extremal/rootsys.hpp"

namespace extremal {

/// A normal (convex) ordering of the reduced positive system, stored as a
/// sequence of positive-root indices.  Every composite root sits between its
/// summands and both end roots are simple.
struct NormalOrdering {
  std::vector<int> roots;  // indices into RootSystem::positive

  bool operator==(const NormalOrdering& o) const { return roots == o.roots; }
  bool operator<(const NormalOrdering& o) const { return roots < o.roots; }
};

/// Convexity check.  `seq` must be a permutation of the reduced positive
/// system (NotAPermutationError otherwise); returns whether every
/// decomposable triple is properly nested.
bool validate_ordering(const std::vector<int>& seq, const RootSystem& rs);

/// All normal orderings, sorted.  Throws TooLargeError when the reduced
/// system has more than 12 roots.
std::vector<NormalOrdering> enumerate_orderings(const RootSystem& rs);

/// Deterministic default: the lexicographically smallest valid ordering
/// under the stored root enumeration.
NormalOrdering canonical_ordering(const RootSystem& rs);

/// All orderings reachable from `o` by one elementary inversion (reversal of
/// a contiguous full rank-2 subsystem), sorted and deduplicated.
std::vector<NormalOrdering> elementary_inversions(const NormalOrdering& o, const RootSystem& rs);

/// Edges {i, j} of the inversion graph on enumerate_orderings(rs).
std::vector<std::pair<int, int>> inversion_graph(const RootSystem& rs,
                                                 const std::vector<NormalOrdering>& all);

/// Theorem check: the inversion graph is connected.
bool inversion_connected(const RootSystem& rs);

}  // namespace extremal
