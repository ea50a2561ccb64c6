#include "extremal/ordering.hpp"

#include <algorithm>
#include <set>

#include "extremal/errors.hpp"
#include "extremal/matrix.hpp"

namespace extremal {

namespace {

std::vector<int> coord_sum(const RootSystem& rs, int a, int b) {
  std::vector<int> s = rs.root(a).coords;
  const auto& t = rs.root(b).coords;
  for (size_t i = 0; i < s.size(); ++i) s[i] += t[i];
  return s;
}

void require_permutation(const std::vector<int>& seq, const RootSystem& rs) {
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect = rs.reduced_index;
  std::sort(expect.begin(), expect.end());
  if (sorted != expect)
    throw NotAPermutationError("sequence does not list each reduced positive root once");
}

bool convex(const std::vector<int>& seq, const RootSystem& rs) {
  std::vector<int> pos(rs.num_positive(), -1);
  for (int i = 0; i < (int)seq.size(); ++i) pos[seq[i]] = i;
  for (size_t a = 0; a < seq.size(); ++a)
    for (size_t b = a + 1; b < seq.size(); ++b) {
      int c = rs.find(coord_sum(rs, seq[a], seq[b]));
      if (c < 0 || pos[c] < 0) continue;
      int pc = pos[c];
      if (!((int)a < pc && pc < (int)b)) return false;
    }
  return true;
}

// Backtracking enumeration: append roots one at a time, rejecting as soon as
// a fully placed decomposable triple is out of order.  Stops early once
// `limit` orderings are found (0 = no limit).
void extend(const RootSystem& rs, std::vector<int>& seq, std::vector<bool>& used,
            const std::vector<int>& pool, std::vector<NormalOrdering>& out, size_t limit) {
  if (limit && out.size() >= limit) return;
  if (seq.size() == pool.size()) {
    out.push_back({seq});
    return;
  }
  for (int idx : pool) {
    if (used[idx]) continue;
    bool ok = true;
    std::vector<int> pos(rs.num_positive(), -1);
    for (int i = 0; i < (int)seq.size(); ++i) pos[seq[i]] = i;
    // Appending idx violates convexity iff some placed composite seq[a]+idx
    // would need idx on its left, or idx is a composite of two placed roots.
    for (int a = 0; a < (int)seq.size() && ok; ++a) {
      int c = rs.find(coord_sum(rs, seq[a], idx));
      if (c >= 0 && pos[c] >= 0 && pos[c] <= a) ok = false;
    }
    for (int a = 0; a < (int)seq.size() && ok; ++a)
      for (int b = a + 1; b < (int)seq.size() && ok; ++b)
        if (rs.find(coord_sum(rs, seq[a], seq[b])) == idx) ok = false;
    if (!ok) continue;
    used[idx] = true;
    seq.push_back(idx);
    extend(rs, seq, used, pool, out, limit);
    seq.pop_back();
    used[idx] = false;
    if (limit && out.size() >= limit) return;
  }
}

}  // namespace

bool validate_ordering(const std::vector<int>& seq, const RootSystem& rs) {
  require_permutation(seq, rs);
  if (!convex(seq, rs)) return false;
  // End roots must be simple; implied by convexity but part of the contract.
  auto is_simple = [&rs](int idx) { return rs.root(idx).height() == 1; };
  if (!seq.empty() && (!is_simple(seq.front()) || !is_simple(seq.back()))) return false;
  return true;
}

std::vector<NormalOrdering> enumerate_orderings(const RootSystem& rs) {
  if (rs.num_reduced() > 12)
    throw TooLargeError("reduced system has " + std::to_string(rs.num_reduced()) +
                        " roots (limit 12)");
  std::vector<int> seq;
  std::vector<bool> used(rs.num_positive(), false);
  std::vector<NormalOrdering> out;
  extend(rs, seq, used, rs.reduced_index, out, 0);
  std::sort(out.begin(), out.end());
  for (const auto& o : out)
    if (!validate_ordering(o.roots, rs)) throw InternalError("enumerated ordering fails validate");
  return out;
}

NormalOrdering canonical_ordering(const RootSystem& rs) {
  // Depth-first in index order, so the first complete ordering is the
  // lexicographically smallest one.  Works above the enumeration size limit.
  std::vector<int> seq;
  std::vector<bool> used(rs.num_positive(), false);
  std::vector<NormalOrdering> out;
  extend(rs, seq, used, rs.reduced_index, out, 1);
  if (out.empty()) throw InternalError("no normal ordering found");
  if (!validate_ordering(out.front().roots, rs))
    throw InternalError("canonical ordering fails validate");
  return out.front();
}

std::vector<NormalOrdering> elementary_inversions(const NormalOrdering& o, const RootSystem& rs) {
  require_permutation(o.roots, rs);
  std::set<NormalOrdering> results;
  const int n = (int)o.roots.size();
  std::vector<int> pos(rs.num_positive(), -1);
  for (int i = 0; i < n; ++i) pos[o.roots[i]] = i;

  // For each pair of roots, the rank-2 subsystem through them is the set of
  // reduced positive roots within their rational span.  An elementary
  // inversion reverses a contiguous occurrence of such a full subsystem.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto& ca = rs.root(o.roots[a]).coords;
      const auto& cb = rs.root(o.roots[b]).coords;
      Matrix m(rs.rank(), 2);
      for (int i = 0; i < rs.rank(); ++i) {
        m.at(i, 0) = ca[i];
        m.at(i, 1) = cb[i];
      }
      if (m.rank() < 2) continue;  // proportional roots do not occur in reduced systems
      std::vector<int> members;
      for (int idx : rs.reduced_index) {
        std::vector<Rat> target(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) target[i] = rs.root(idx).coords[i];
        if (m.solve(target)) members.push_back(pos[idx]);
      }
      std::sort(members.begin(), members.end());
      if (members.front() != a || members.back() != b) continue;
      if (members.back() - members.front() + 1 != (int)members.size()) continue;
      NormalOrdering inv = o;
      std::reverse(inv.roots.begin() + members.front(), inv.roots.begin() + members.back() + 1);
      if (!validate_ordering(inv.roots, rs))
        throw InternalError("elementary inversion produced an invalid ordering");
      if (!(inv == o)) results.insert(inv);
    }
  return {results.begin(), results.end()};
}

std::vector<std::pair<int, int>> inversion_graph(const RootSystem& rs,
                                                 const std::vector<NormalOrdering>& all) {
  std::vector<std::pair<int, int>> edges;
  auto index_of = [&all](const NormalOrdering& o) {
    auto it = std::lower_bound(all.begin(), all.end(), o);
    if (it == all.end() || !(*it == o)) throw InternalError("inversion left the ordering set");
    return (int)(it - all.begin());
  };
  for (int i = 0; i < (int)all.size(); ++i)
    for (const auto& nb : elementary_inversions(all[i], rs)) {
      int j = index_of(nb);
      if (i < j) edges.push_back({i, j});
    }
  return edges;
}

bool inversion_connected(const RootSystem& rs) {
  auto all = enumerate_orderings(rs);
  if (all.empty()) return false;
  auto edges = inversion_graph(rs, all);
  std::vector<std::vector<int>> adj(all.size());
  for (auto [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<bool> seen(all.size(), false);
  std::vector<int> stack = {0};
  seen[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == all.size();
}

}  // namespace extremal
