#include "extremal/taylor.hpp"

#include <algorithm>
#include <sstream>

#include "extremal/errors.hpp"

namespace extremal {

bool PbwMonomial::is_identity() const {
  auto all0 = [](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
  };
  return all0(lower) && all0(raise);
}

int PbwMonomial::parity_bit(const RootSystem& rs, const std::vector<int>& ordering) const {
  int p = 0;
  for (size_t pos = 0; pos < ordering.size(); ++pos)
    p += rs.root(ordering[pos]).parity * (lower[pos] + raise[pos]);
  return p & 1;
}

CartanRational TaylorElement::leading(int nvars) const {
  PbwMonomial id;
  id.lower.assign(ordering_roots.size(), 0);
  id.raise.assign(ordering_roots.size(), 0);
  auto it = terms.find(id);
  return it == terms.end() ? CartanRational::zero(nvars) : it->second;
}

TaylorAlgebra::TaylorAlgebra(std::shared_ptr<const StructureTable> table, NormalOrdering ordering,
                             int grade, RhoMode mode)
    : m_table(std::move(table)), m_ordering(std::move(ordering)), m_grade(grade), m_mode(mode) {
  const RootSystem& rs = root_system();
  if (!validate_ordering(m_ordering.roots, rs))
    throw OrderingMismatchError("constructor ordering is not a normal ordering");
  if (grade < 0) throw TruncationMismatchError("negative grade");
  m_pos_of_root.assign(rs.num_positive(), -1);
  for (int pos = 0; pos < positions(); ++pos) m_pos_of_root[m_ordering.roots[pos]] = pos;
}

int TaylorAlgebra::key_of(GenSym s) const {
  int pos = m_pos_of_root.at(s.root);
  if (pos < 0) throw UnknownSymbolError("root not in the reduced ordering");
  return s.lowering ? positions() - 1 - pos : positions() + pos;
}

GenSym TaylorAlgebra::sym_of(int key) const {
  const int p = positions();
  if (key < p) return {m_ordering.roots[p - 1 - key], true};
  return {m_ordering.roots[key - p], false};
}

TaylorElement TaylorAlgebra::zero() const {
  TaylorElement x;
  x.ordering_roots = m_ordering.roots;
  x.grade = m_grade;
  return x;
}

TaylorElement TaylorAlgebra::one() const {
  return monomial(PbwMonomial{std::vector<int>(positions(), 0), std::vector<int>(positions(), 0)},
                  CartanRational::one(nvars()));
}

TaylorElement TaylorAlgebra::monomial(const PbwMonomial& m, const CartanRational& c) const {
  TaylorElement x = zero();
  if (!c.is_zero()) x.terms.emplace(m, c);
  return x;
}

TaylorElement TaylorAlgebra::generator(GenSym s) const {
  PbwMonomial m;
  m.lower.assign(positions(), 0);
  m.raise.assign(positions(), 0);
  int pos = m_pos_of_root.at(s.root);
  if (pos < 0) throw UnknownSymbolError("generator outside the reduced system");
  (s.lowering ? m.lower : m.raise)[pos] = 1;
  return monomial(m, CartanRational::one(nvars()));
}

TaylorElement TaylorAlgebra::balanced_power(int root_idx, int n, const CartanRational& c) const {
  PbwMonomial m;
  m.lower.assign(positions(), 0);
  m.raise.assign(positions(), 0);
  int pos = m_pos_of_root.at(root_idx);
  if (pos < 0) throw UnknownSymbolError("root outside the reduced system");
  m.lower[pos] = n;
  m.raise[pos] = n;
  return monomial(m, c);
}

void TaylorAlgebra::check_compatible(const TaylorElement& x, const char* who) const {
  if (x.ordering_roots != m_ordering.roots)
    throw OrderingMismatchError(std::string(who) + ": element uses a different normal ordering");
  if (x.grade != m_grade)
    throw TruncationMismatchError(std::string(who) + ": element uses a different grade");
}

TaylorElement TaylorAlgebra::add(const TaylorElement& a, const TaylorElement& b) const {
  check_compatible(a, "add");
  check_compatible(b, "add");
  TaylorElement r = a;
  for (const auto& [m, c] : b.terms) accumulate(r.terms, m, c);
  return r;
}

TaylorElement TaylorAlgebra::subtract(const TaylorElement& a, const TaylorElement& b) const {
  check_compatible(a, "subtract");
  check_compatible(b, "subtract");
  TaylorElement r = a;
  for (const auto& [m, c] : b.terms) accumulate(r.terms, m, -c);
  return r;
}

TaylorElement TaylorAlgebra::scale(const TaylorElement& a, const CartanRational& c) const {
  check_compatible(a, "scale");
  TaylorElement r = zero();
  for (const auto& [m, k] : a.terms) {
    CartanRational v = k * c;
    if (!v.is_zero()) r.terms.emplace(m, std::move(v));
  }
  return r;
}

std::vector<int> TaylorAlgebra::weight_of(const PbwMonomial& m) const {
  const RootSystem& rs = root_system();
  std::vector<int> w(rs.rank(), 0);
  for (int pos = 0; pos < positions(); ++pos) {
    const auto& l = rs.root(m_ordering.roots[pos]).coords;
    int net = m.raise[pos] - m.lower[pos];
    if (net)
      for (int i = 0; i < rs.rank(); ++i) w[i] += net * l[i];
  }
  return w;
}

int TaylorAlgebra::raising_grade(const PbwMonomial& m) const {
  const RootSystem& rs = root_system();
  int best = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    int s = 0;
    for (int pos = 0; pos < positions(); ++pos)
      s += m.raise[pos] * rs.root(m_ordering.roots[pos]).coords[i];
    best = std::max(best, s);
  }
  return best;
}

int TaylorAlgebra::degree_gap(const PbwMonomial& m) const {
  const RootSystem& rs = root_system();
  int best = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    int s = 0;
    for (int pos = 0; pos < positions(); ++pos)
      s += (m.lower[pos] - m.raise[pos]) * rs.root(m_ordering.roots[pos]).coords[i];
    best = std::max(best, std::abs(s));
  }
  return best;
}

int TaylorAlgebra::max_grade(const TaylorElement& x) const {
  int g = 0;
  for (const auto& [m, c] : x.terms) g = std::max(g, raising_grade(m));
  return g;
}

CartanRational TaylorAlgebra::shift_past(const CartanRational& c,
                                         const std::vector<int>& weight) const {
  bool zero = std::all_of(weight.begin(), weight.end(), [](int v) { return v == 0; });
  if (zero) return c;
  const RootSystem& rs = root_system();
  std::vector<Rat> mu(nvars(), Rat(0));
  for (int i = 0; i < rs.rank(); ++i) {
    for (int j = 0; j < rs.rank(); ++j)
      if (weight[j]) mu[i] += rs.bilinear[i][j] * weight[j];
    mu[i] = -mu[i];  // moving the coefficient to the left
  }
  return c.shifted(mu);
}

void TaylorAlgebra::accumulate(std::map<PbwMonomial, CartanRational>& acc, const PbwMonomial& m,
                               const CartanRational& c) const {
  if (c.is_zero()) return;
  if (raising_grade(m) > m_grade || degree_gap(m) > m_grade) return;  // truncation
  auto [it, fresh] = acc.emplace(m, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

const std::vector<TaylorAlgebra::Item>& TaylorAlgebra::expansion(int kx, int ky) const {
  auto found = m_expansions.find({kx, ky});
  if (found != m_expansions.end()) return found->second;
  if (kx <= ky) throw InternalError("expansion queried for an ordered pair");
  const RootSystem& rs = root_system();
  GenSym x = sym_of(kx), y = sym_of(ky);
  std::vector<Item> items;
  // Swap term with the super sign.
  Rat swap_sign = (m_table->theta(x) & m_table->theta(y)) ? -1 : 1;
  items.push_back({CartanRational::from_rat(nvars(), swap_sign), {ky, kx}});
  // Bracket corrections.
  const BracketValue& b = m_table->bracket(x, y);
  for (const auto& [s, c] : b.vectors) {
    if (m_pos_of_root.at(s.root) >= 0) {
      items.push_back({CartanRational::from_rat(nvars(), c), {key_of(s)}});
      continue;
    }
    // A doubled dark root: rewrite e_{+-2g} as a multiple of e_{+-g}^2 using
    // [e_g, e_g] = 2 e_g^2 = c2 e_{2g}.
    bool half_found = false;
    for (int idx : rs.reduced_index) {
      std::vector<int> dbl = rs.root(idx).coords;
      for (auto& v : dbl) v *= 2;
      if (dbl == rs.root(s.root).coords) {
        GenSym g{idx, s.lowering};
        const BracketValue& sq = m_table->bracket(g, g);
        if (sq.vectors.size() != 1 || !(sq.vectors[0].first == s))
          throw InternalError("unexpected dark square bracket");
        Rat c2 = sq.vectors[0].second;
        items.push_back(
            {CartanRational::from_rat(nvars(), c * 2 / c2), {key_of(g), key_of(g)}});
        half_found = true;
        break;
      }
    }
    if (!half_found) throw InternalError("bracket leaves the reduced span");
  }
  if (!b.cartan.empty()) {
    Polynomial h(nvars());
    for (int i = 0; i < (int)b.cartan.size(); ++i)
      if (sgn(b.cartan[i]) != 0) h = h + Polynomial::variable(nvars(), i, b.cartan[i]);
    if (!h.is_zero()) items.push_back({CartanRational::from_poly(h), {}});
  }
  auto [it, ok] = m_expansions.emplace(std::make_pair(kx, ky), std::move(items));
  return it->second;
}

void TaylorAlgebra::straighten_into(std::map<PbwMonomial, CartanRational>& acc,
                                    CartanRational coef, PbwMonomial mono,
                                    std::vector<int> pending) const {
  // Worklist of (coef, canonical monomial, pending suffix keys).
  struct State {
    CartanRational coef;
    PbwMonomial mono;
    std::vector<int> pending;
    size_t next = 0;  // cursor into pending
  };
  const RootSystem& rs = root_system();
  const int p = positions();
  std::vector<State> work;
  work.push_back({std::move(coef), std::move(mono), std::move(pending), 0});
  while (!work.empty()) {
    State st = std::move(work.back());
    work.pop_back();
    bool dead = false;
    while (st.next < st.pending.size()) {
      int s = st.pending[st.next];
      // Last written key of the canonical monomial.
      int last = -1;
      for (int k = 2 * p - 1; k >= 0; --k) {
        GenSym g = sym_of(k);
        int e = (g.lowering ? st.mono.lower : st.mono.raise)[m_pos_of_root[g.root]];
        if (e > 0) {
          last = k;
          break;
        }
      }
      if (last <= s) {
        GenSym g = sym_of(s);
        int pos = m_pos_of_root[g.root];
        int& e = (g.lowering ? st.mono.lower : st.mono.raise)[pos];
        if (e >= 1 && rs.root(g.root).color == RootColor::Grey) {
          dead = true;  // square of a grey root vector vanishes
          break;
        }
        ++e;
        ++st.next;
        continue;
      }
      // Out of order: peel one copy of the last symbol and expand last*s.
      GenSym g = sym_of(last);
      --(g.lowering ? st.mono.lower : st.mono.raise)[m_pos_of_root[g.root]];
      std::vector<int> prefix_weight = weight_of(st.mono);
      for (const Item& item : expansion(last, s)) {
        State ns;
        ns.coef = st.coef * shift_past(item.coef, prefix_weight);
        if (ns.coef.is_zero()) continue;
        ns.mono = st.mono;
        ns.pending = item.word;
        ns.pending.insert(ns.pending.end(), st.pending.begin() + st.next + 1, st.pending.end());
        ns.next = 0;
        work.push_back(std::move(ns));
      }
      dead = true;
      break;
    }
    if (!dead) accumulate(acc, st.mono, st.coef);
  }
}

TaylorElement TaylorAlgebra::multiply(const TaylorElement& a, const TaylorElement& b) const {
  check_compatible(a, "multiply");
  check_compatible(b, "multiply");
  const int p = positions();
  TaylorElement out = zero();
  for (const auto& [ma, ca] : a.terms) {
    bool a_balanced = degree_gap(ma) == 0;
    std::vector<int> wa = weight_of(ma);
    int ga_low;  // lowering grade of ma = raising grade of its mirror
    {
      PbwMonomial mirror{ma.raise, ma.lower};
      ga_low = raising_grade(mirror);
    }
    for (const auto& [mb, cb] : b.terms) {
      // Safe skips: the raising part of mb survives into every product term,
      // and for balanced pairs the product grade is at least the max factor
      // grade.
      if (raising_grade(mb) > m_grade) continue;
      if (a_balanced && degree_gap(mb) == 0 &&
          std::max(ga_low, raising_grade(mb)) > m_grade)
        continue;
      CartanRational coef = ca * shift_past(cb, weight_of(ma));
      if (coef.is_zero()) continue;
      // Pending word: written symbols of mb.
      std::vector<int> pending;
      for (int k = 0; k < 2 * p; ++k) {
        GenSym g = sym_of(k);
        int e = (g.lowering ? mb.lower : mb.raise)[m_pos_of_root[g.root]];
        for (int t = 0; t < e; ++t) pending.push_back(k);
      }
      straighten_into(out.terms, std::move(coef), ma, std::move(pending));
    }
  }
  return out;
}

TaylorElement TaylorAlgebra::canonicalize_from(const TaylorElement& x,
                                               const TaylorAlgebra& src) const {
  src.check_compatible(x, "canonicalize");
  if (src.m_table != m_table) throw OrderingMismatchError("canonicalize across algebras");
  if (src.m_grade != m_grade) throw TruncationMismatchError("canonicalize across grades");
  TaylorElement out = zero();
  PbwMonomial id{std::vector<int>(positions(), 0), std::vector<int>(positions(), 0)};
  for (const auto& [m, c] : x.terms) {
    std::vector<int> pending;
    for (int k = 0; k < 2 * src.positions(); ++k) {
      GenSym g = src.sym_of(k);
      int e = (g.lowering ? m.lower : m.raise)[src.m_pos_of_root[g.root]];
      for (int t = 0; t < e; ++t) pending.push_back(key_of(g));
    }
    straighten_into(out.terms, c, id, std::move(pending));
  }
  return out;
}

Matrix TaylorAlgebra::apply(const TaylorElement& x, const WeightModule& m) const {
  std::vector<int> cols(m.dim);
  for (int i = 0; i < m.dim; ++i) cols[i] = i;
  return apply_on_columns(x, m, cols);
}

Matrix TaylorAlgebra::apply_on_columns(const TaylorElement& x, const WeightModule& m,
                                       const std::vector<int>& cols) const {
  check_compatible(x, "apply");
  if (m_mode != RhoMode::Standard) throw InternalError("apply requires the standard rho mode");
  if (&m.root_system() != &root_system())
    throw OrderingMismatchError("module built over a different algebra");
  const int p = positions();
  Matrix out(m.dim, (int)cols.size());
  for (const auto& [mono, coef] : x.terms) {
    // Operator part, written order: lowering block then raising block.
    Matrix op = Matrix::identity(m.dim);
    for (int k = 0; k < 2 * p; ++k) {
      GenSym g = sym_of(k);
      int e = (g.lowering ? mono.lower : mono.raise)[m_pos_of_root[g.root]];
      for (int t = 0; t < e; ++t) op = op * m.act(g);
    }
    // Coefficient evaluated at the weight of each output row, lazily: only
    // rows the operator actually reaches.
    std::map<int, Rat> row_value;
    for (int c = 0; c < (int)cols.size(); ++c)
      for (int r = 0; r < m.dim; ++r) {
        const Rat& v = op.at(r, cols[c]);
        if (sgn(v) == 0) continue;
        auto it = row_value.find(r);
        if (it == row_value.end()) it = row_value.emplace(r, coef.evaluate(m.weights[r])).first;
        out.at(r, c) += it->second * v;
      }
  }
  return out;
}

std::string TaylorAlgebra::str(const TaylorElement& x) const {
  check_compatible(x, "str");
  const RootSystem& rs = root_system();
  auto names = coeff_names(rs, m_mode);
  std::ostringstream os;
  if (x.terms.empty()) return "0";
  bool first = true;
  for (const auto& [m, c] : x.terms) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.str(names) << "]";
    for (int k = 0; k < 2 * positions(); ++k) {
      GenSym g = sym_of(k);
      int e = (g.lowering ? m.lower : m.raise)[m_pos_of_root[g.root]];
      if (!e) continue;
      os << " " << (g.lowering ? "f(" : "e(") << rs.root_name(g.root) << ")";
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace extremal
