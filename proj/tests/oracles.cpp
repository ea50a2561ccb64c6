#include "oracles.hpp"

#include <algorithm>
#include <map>

#include "extremal/errors.hpp"
#include "extremal/ordering.hpp"

namespace extremal::oracles {

std::vector<std::vector<int>> permutation_orderings(const RootSystem& rs) {
  if (rs.num_reduced() > 8) throw TooLargeError("permutation oracle limited to 8 roots");
  std::vector<int> perm = rs.reduced_index;
  std::sort(perm.begin(), perm.end());
  std::vector<std::vector<int>> out;
  do {
    if (validate_ordering(perm, rs)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CgOracleEntry> cg_recursion(const Rat& j1, const Rat& j2, const Rat& j) {
  if (j < abs(j1 - j2) || j > j1 + j2 || !is_integer(j1 + j2 - j))
    throw InvalidTriangleError(rat_str(j1) + "," + rat_str(j2) + "," + rat_str(j));
  const long n1 = Rat(2 * j1).get_num().get_si();
  const long n2 = Rat(2 * j2).get_num().get_si();
  const long K = Rat(j1 + j2 - j).get_num().get_si();

  // Top vector sum_k x_k b_k (x) b_{K-k} in divided-power bases, from the
  // two-term recursion imposed by J_+ w = 0:
  //   (2 j1 - k) x_{k+1} + (2 j2 - K + k + 1) x_k = 0.
  long kmin = std::max(0L, K - n2), kmax = std::min(n1, K);
  std::vector<Rat> x(kmax + 1, Rat(0));
  x[kmin] = 1;
  for (long k = kmin; k < kmax; ++k) x[k + 1] = -x[k] * Rat(n2 - K + k + 1) / Rat(n1 - k);
  // Condon-Shortley: the maximal-m1 component (smallest k) is positive.
  if (sgn(x[kmin]) < 0)
    for (auto& v : x) v = -v;

  auto binom = [](long n, long k) {
    Rat b = 1;
    for (long i = 0; i < k; ++i) b = b * Rat(n - i) / Rat(i + 1);
    return b;
  };
  std::vector<CgOracleEntry> table;
  std::map<std::pair<long, long>, Rat> u;  // components over (k1, k2)
  for (long k = kmin; k <= kmax; ++k)
    if (sgn(x[k]) != 0) u[{k, K - k}] = x[k];
  for (Rat m = j; m >= -j; m -= 1) {
    Rat norm2 = 0;
    for (const auto& [kk, v] : u) norm2 += v * v * binom(n1, kk.first) * binom(n2, kk.second);
    for (const auto& [kk, v] : u) {
      CgOracleEntry e;
      e.m = m;
      e.m1 = j1 - kk.first;
      e.m2 = j2 - kk.second;
      e.sign = sgn(v);
      e.value_sq = v * v * binom(n1, kk.first) * binom(n2, kk.second) / norm2;
      table.push_back(e);
    }
    // Lower: f(b_{k1} (x) b_{k2}) = (k1+1) b_{k1+1} (x) b_{k2} + (k2+1) b_{k1} (x) b_{k2+1}.
    std::map<std::pair<long, long>, Rat> next;
    for (const auto& [kk, v] : u) {
      if (kk.first + 1 <= n1) next[{kk.first + 1, kk.second}] += v * Rat(kk.first + 1);
      if (kk.second + 1 <= n2) next[{kk.first, kk.second + 1}] += v * Rat(kk.second + 1);
    }
    u = std::move(next);
  }
  return table;
}

bool module_bracket_check(const WeightModule& m, const StructureTable& t) {
  const RootSystem& rs = t.root_system();
  std::vector<GenSym> syms;
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    syms.push_back({idx, false});
    syms.push_back({idx, true});
  }
  auto value_matrix = [&](const BracketValue& v) {
    Matrix out(m.dim, m.dim);
    for (const auto& [s, c] : v.vectors) out = out + m.act(s) * c;
    for (int i = 0; i < (int)v.cartan.size(); ++i) out = out + m.hact[i] * v.cartan[i];
    return out;
  };
  for (GenSym x : syms)
    for (GenSym y : syms) {
      Matrix lhs = super_bracket(m.act(x), t.theta(x), m.act(y), t.theta(y));
      if (lhs != value_matrix(t.bracket(x, y))) return false;
    }
  for (int i = 0; i < rs.rank(); ++i)
    for (GenSym x : syms) {
      Matrix lhs = super_bracket(m.hact[i], 0, m.act(x), t.theta(x));
      if (lhs != m.act(x) * t.cartan_action(i, x)) return false;
    }
  return true;
}

}  // namespace extremal::oracles
