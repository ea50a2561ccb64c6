#include "extremal/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "extremal/errors.hpp"

namespace extremal {

bool BracketValue::is_zero() const {
  if (!vectors.empty()) return false;
  for (const auto& c : cartan)
    if (sgn(c) != 0) return false;
  return true;
}

BracketValue& BracketValue::add(GenSym s, const Rat& c) {
  if (extremal::is_zero(c)) return *this;
  auto it = std::find_if(vectors.begin(), vectors.end(),
                         [&s](const auto& p) { return p.first == s; });
  if (it != vectors.end()) {
    it->second += c;
    if (extremal::is_zero(it->second)) vectors.erase(it);
  } else {
    vectors.push_back({s, c});
    std::sort(vectors.begin(), vectors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return *this;
}

BracketValue& BracketValue::add_cartan(int i, const Rat& c) {
  if ((int)cartan.size() <= i) cartan.resize(i + 1, Rat(0));
  cartan[i] += c;
  return *this;
}

BracketValue& BracketValue::scale(const Rat& c) {
  for (auto& [s, v] : vectors) v *= c;
  for (auto& v : cartan) v *= c;
  if (extremal::is_zero(c)) {
    vectors.clear();
    cartan.clear();
  }
  return *this;
}

Matrix super_bracket(const Matrix& x, int theta_x, const Matrix& y, int theta_y) {
  Matrix xy = x * y;
  Matrix yx = y * x;
  return (theta_x & theta_y & 1) ? xy + yx : xy - yx;
}

namespace {

// ---------------------------------------------------------------------------
// Defining realizations.  Each builder returns raw (unnormalized) root-vector
// matrices together with basis parities and weights in pairing coordinates.
// ---------------------------------------------------------------------------

struct Realization {
  int dim = 0;
  std::vector<int> parities;
  std::vector<std::vector<Rat>> weights;  // pairing coords (alpha_i, wt_b)
  std::vector<Matrix> eraw, fraw;         // indexed like rs.positive
};

Matrix unit_matrix(int dim, int i, int j, const Rat& c = 1) {
  Matrix m(dim, dim);
  m.at(i, j) = c;
  return m;
}

// gl(N) and gl(m|n): matrix units on C^{m|n}; for plain A_r take n = 0.
Realization realize_gl(const RootSystem& rs, int m, int n) {
  const int dim = m + n;
  Realization re;
  re.dim = dim;
  for (int b = 0; b < dim; ++b) re.parities.push_back(b < m ? 0 : 1);
  // Ambient metric: +1 for eps, -1 for delta.
  std::vector<Rat> metric(dim, Rat(1));
  for (int b = m; b < dim; ++b) metric[b] = -1;
  // Simple root i = u_i - u_{i+1}; pairing (alpha_i, u_b) = metric contraction.
  for (int b = 0; b < dim; ++b) {
    std::vector<Rat> w(rs.rank(), Rat(0));
    for (int i = 0; i < rs.rank(); ++i) {
      if (b == i) w[i] += metric[b];
      if (b == i + 1) w[i] -= metric[b];
    }
    re.weights.push_back(std::move(w));
  }
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    // Root sum_{i in [a,b)} alpha_i = u_a - u_b.
    const auto& l = rs.root(idx).coords;
    int a = -1, b = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (l[i]) {
        if (a < 0) a = i;
        b = i + 1;
      }
    re.eraw.push_back(unit_matrix(dim, a, b));
    re.fraw.push_back(unit_matrix(dim, b, a));
  }
  return re;
}

// so(2r+1), so(2r), sp(2r) with the antidiagonal form.  s-signs are all +1
// for the orthogonal case and split +/- for the symplectic one.
Realization realize_bcd(const RootSystem& rs, Family fam) {
  const int r = rs.rank();
  const int dim = fam == Family::B ? 2 * r + 1 : 2 * r;
  const Rat metric = fam == Family::B ? 2 : 1;  // (eps_i, eps_j) scale
  Realization re;
  re.dim = dim;
  re.parities.assign(dim, 0);
  auto mirror = [dim](int i) { return dim - 1 - i; };
  auto ssgn = [&](int i) { return fam == Family::C && i >= r ? Rat(-1) : Rat(1); };
  // Basis weight in the eps basis: +eps_k for k < r, -eps for mirrored, 0 middle.
  auto eps_weight = [&](int b) {
    std::vector<Rat> w(r, Rat(0));
    if (b < r)
      w[b] = 1;
    else if (mirror(b) < r)
      w[mirror(b)] = -1;
    return w;
  };
  // Simple roots in the eps basis.
  std::vector<std::vector<Rat>> simple;
  for (int i = 0; i + 1 < r; ++i) {
    std::vector<Rat> v(r, Rat(0));
    v[i] = 1;
    v[i + 1] = -1;
    simple.push_back(v);
  }
  {
    std::vector<Rat> v(r, Rat(0));
    if (fam == Family::B) v[r - 1] = 1;
    if (fam == Family::C) v[r - 1] = 2;
    if (fam == Family::D) {
      v[r - 2] = 1;
      v[r - 1] = 1;
    }
    simple.push_back(v);
  }
  for (int b = 0; b < dim; ++b) {
    auto wb = eps_weight(b);
    std::vector<Rat> w(r, Rat(0));
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) w[i] += metric * simple[i][k] * wb[k];
    re.weights.push_back(std::move(w));
  }
  // Root vector for an ambient root eps_a - eps_b maps basis slot of weight
  // eps_b to the slot of weight eps_a:  M_{ij} = E_ij - s_i s_j E_{j', i'}.
  auto basis_elem = [&](int i, int j) {
    Matrix m(dim, dim);
    m.at(i, j) = 1;
    m.at(mirror(j), mirror(i)) = m.at(mirror(j), mirror(i)) - ssgn(i) * ssgn(j);
    return m;
  };
  // Recover each positive root's ambient form from its simple coordinates.
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    const auto& l = rs.root(idx).coords;
    std::vector<Rat> amb(r, Rat(0));
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) amb[k] += Rat(l[i]) * simple[i][k];
    // Identify the slots: find indices a (weight +) and b (weight -) with
    // amb = eps_a - eps_b over extended slots (middle slot = zero weight).
    int a = -1, b = -1;
    bool is2 = false;  // 2 eps_a (sp long root)
    std::vector<int> plus, minus;
    for (int k = 0; k < r; ++k) {
      if (amb[k] == 2) is2 = true;
      if (amb[k] == 1 || amb[k] == 2) plus.push_back(k);
      if (amb[k] == -1) minus.push_back(k);
    }
    if (is2) {
      a = plus.at(0);
      b = mirror(a);
    } else if (plus.size() == 1 && minus.size() == 1) {
      a = plus[0];
      b = minus[0];
    } else if (plus.size() == 2) {
      a = plus[0];
      b = mirror(plus[1]);
    } else if (plus.size() == 1 && minus.empty()) {
      a = plus[0];
      b = r;  // middle slot, B family only
    } else {
      throw InternalError("unrecognized ambient root");
    }
    re.eraw.push_back(basis_elem(a, b));
    re.fraw.push_back(basis_elem(b, a));
  }
  return re;
}

// G2 inside so(7): V = 3 + 3bar + 1 as a module over the long-root sl(3).
// x-slots 0..2, z-slot 3, y-slots 4..6.  The short-root generators combine
// the cross product with z-column maps; constants chosen so the span closes.
Realization realize_g2(const RootSystem& rs) {
  const int dim = 7;
  Realization re;
  re.dim = dim;
  re.parities.assign(dim, 0);

  auto rho_a = [&](int i, int j) {  // sl(3) unit E_ij acting as (A, -A^T, 0)
    Matrix m(dim, dim);
    m.at(i, j) = 1;
    m.at(4 + j, 4 + i) = -1;
    return m;
  };
  int eps[3][3][3] = {};
  eps[0][1][2] = eps[1][2][0] = eps[2][0][1] = 1;
  eps[0][2][1] = eps[2][1][0] = eps[1][0][2] = -1;
  auto phi = [&](int k) {  // weight = wt(x_k)
    Matrix m(dim, dim);
    for (int i = 0; i < 3; ++i)
      for (int mm = 0; mm < 3; ++mm)
        if (eps[i][k][mm]) m.at(4 + i, mm) = eps[i][k][mm];  // x -> u cross x in 3bar
    m.at(k, 3) = 1;                                          // z -> u
    m.at(3, 4 + k) = 1;                                      // y -> <u,y> z
    return m;
  };
  auto phib = [&](int k) {  // weight = -wt(x_k)
    Matrix m(dim, dim);
    for (int i = 0; i < 3; ++i)
      for (int mm = 0; mm < 3; ++mm)
        if (eps[i][k][mm]) m.at(i, 4 + mm) = -eps[i][k][mm];  // y -> -(w cross y) in 3
    m.at(4 + k, 3) = 2;                                       // z -> 2w
    m.at(3, k) = 2;                                           // x -> 2<w,x> z
    return m;
  };

  // Weights of the x-slots over the simple roots (alpha long, beta short):
  // wt(x1) = alpha+beta, wt(x2) = beta, wt(x3) = -(alpha+2beta).
  std::vector<std::vector<int>> xwt = {{1, 1}, {0, 1}, {-1, -2}};
  auto pairing_with = [&](const std::vector<int>& w) {
    std::vector<Rat> p(2, Rat(0));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) p[i] += rs.bilinear[i][j] * w[j];
    return p;
  };
  for (int b = 0; b < dim; ++b) {
    std::vector<int> w(2, 0);
    if (b < 3) w = xwt[b];
    if (b >= 4) w = {-xwt[b - 4][0], -xwt[b - 4][1]};
    re.weights.push_back(pairing_with(w));
  }

  // Positive roots: a=alpha, b=beta; coords sorted as in build_root_system.
  auto put = [&](const std::vector<int>& coords, Matrix e, Matrix f) {
    int idx = rs.find(coords);
    if (idx < 0) throw InternalError("G2 root missing");
    if ((int)re.eraw.size() <= idx) {
      re.eraw.resize(rs.num_positive(), Matrix(dim, dim));
      re.fraw.resize(rs.num_positive(), Matrix(dim, dim));
    }
    re.eraw[idx] = std::move(e);
    re.fraw[idx] = std::move(f);
  };
  re.eraw.resize(rs.num_positive(), Matrix(dim, dim));
  re.fraw.resize(rs.num_positive(), Matrix(dim, dim));
  put({1, 0}, rho_a(0, 1), rho_a(1, 0));    // alpha = wt(x1) - wt(x2)
  put({2, 3}, rho_a(0, 2), rho_a(2, 0));    // 2a+3b = wt(x1) - wt(x3)
  put({1, 3}, rho_a(1, 2), rho_a(2, 1));    // a+3b  = wt(x2) - wt(x3)
  put({1, 1}, phi(0), phib(0));             // a+b   = wt(x1)
  put({0, 1}, phi(1), phib(1));             // b     = wt(x2)
  put({1, 2}, phib(2), phi(2));             // a+2b  = -wt(x3)
  return re;
}

// osp(1|2) on C^{2|1}: basis ordered by descending weight with parities
// (0,1,0); the odd generators move between the even and odd slots.
Realization realize_osp12(const RootSystem& rs) {
  Realization re;
  re.dim = 3;
  re.parities = {0, 1, 0};
  re.weights = {{Rat(1)}, {Rat(0)}, {Rat(-1)}};
  Matrix e(3, 3), f(3, 3);
  e.at(0, 1) = 1;
  e.at(1, 2) = 1;
  f.at(1, 0) = 1;
  f.at(2, 1) = -1;
  Matrix e2(3, 3), f2(3, 3);
  e2.at(0, 2) = 1;
  f2.at(2, 0) = -1;
  re.eraw.resize(rs.num_positive(), Matrix(3, 3));
  re.fraw.resize(rs.num_positive(), Matrix(3, 3));
  re.eraw[rs.find({1})] = e;
  re.fraw[rs.find({1})] = f;
  re.eraw[rs.find({2})] = e2;
  re.fraw[rs.find({2})] = f2;
  return re;
}

Realization realize_family(const RootSystem& rs) {
  switch (rs.spec.family) {
    case Family::A: return realize_gl(rs, rs.rank() + 1, 0);
    case Family::GL: return realize_gl(rs, rs.spec.gl_m, rs.spec.gl_n);
    case Family::B:
    case Family::C:
    case Family::D: return realize_bcd(rs, rs.spec.family);
    case Family::G2: return realize_g2(rs);
    case Family::OSP12: return realize_osp12(rs);
  }
  throw UnsupportedAlgebraError(rs.spec.name);
}

// Exact decomposition of matrices over a fixed linearly independent set.
// A full-rank row subset is inverted once; every decomposition is then a
// matrix-vector product plus a consistency check.
class Decomposer {
 public:
  Decomposer(const std::vector<const Matrix*>& basis, int dim) : m_dim(dim) {
    const int nb = (int)basis.size();
    m_flat = Matrix(dim * dim, nb);
    for (int c = 0; c < nb; ++c)
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m_flat.at(i * dim + j, c) = basis[c]->at(i, j);
    // Greedily pick nb independent rows.
    Matrix probe(nb, nb);
    int have = 0;
    for (int r = 0; r < dim * dim && have < nb; ++r) {
      for (int c = 0; c < nb; ++c) probe.at(have, c) = m_flat.at(r, c);
      Matrix head(have + 1, nb);
      for (int i = 0; i <= have; ++i)
        for (int c = 0; c < nb; ++c) head.at(i, c) = probe.at(i, c);
      if (head.rank() == have + 1) {
        m_rows.push_back(r);
        ++have;
      }
    }
    if (have != nb) throw InternalError("basis matrices are linearly dependent");
    // Invert the square row submatrix via [S | I] elimination.
    Matrix aug(nb, 2 * nb);
    for (int i = 0; i < nb; ++i) {
      for (int c = 0; c < nb; ++c) aug.at(i, c) = m_flat.at(m_rows[i], c);
      aug.at(i, nb + i) = 1;
    }
    aug.rref();
    m_inv = Matrix(nb, nb);
    for (int i = 0; i < nb; ++i)
      for (int c = 0; c < nb; ++c) m_inv.at(i, c) = aug.at(i, nb + c);
  }

  std::vector<Rat> decompose(const Matrix& m) const {
    const int nb = m_inv.rows();
    std::vector<Rat> sub(nb);
    for (int i = 0; i < nb; ++i) sub[i] = m.at(m_rows[i] / m_dim, m_rows[i] % m_dim);
    std::vector<Rat> x = m_inv.apply(sub);
    // Verify on all entries; brackets must stay inside the spanned space.
    std::vector<Rat> full = m_flat.apply(x);
    for (int i = 0; i < m_dim; ++i)
      for (int j = 0; j < m_dim; ++j)
        if (full[i * m_dim + j] != m.at(i, j))
          throw InternalError("bracket result escapes the Cartan-Weyl span");
    return x;
  }

 private:
  int m_dim;
  Matrix m_flat;
  Matrix m_inv;
  std::vector<int> m_rows;
};

}  // namespace

const BracketValue& StructureTable::bracket(GenSym x, GenSym y) const {
  auto it = m_table.find({x, y});
  if (it == m_table.end()) throw InternalError("bracket outside table");
  return it->second;
}

Rat StructureTable::cartan_action(int i, GenSym s) const {
  Rat v = m_rs->mu_of(s.root)[i];
  return s.lowering ? -v : v;
}

const Matrix& StructureTable::matrix_of(GenSym s) const {
  return s.lowering ? m_fmat.at(s.root) : m_emat.at(s.root);
}

StructureTable StructureTable::build(std::shared_ptr<const RootSystem> rs) {
  StructureTable t;
  t.m_rs = std::move(rs);
  const RootSystem& R = *t.m_rs;
  Realization re = realize_family(R);
  t.m_dim = re.dim;
  t.m_parities = re.parities;
  t.m_weights = re.weights;
  t.m_emat = std::move(re.eraw);
  t.m_fmat = std::move(re.fraw);

  // Cartan matrices: h_i acts on a weight vector by (alpha_i, weight).
  for (int i = 0; i < R.rank(); ++i) {
    std::vector<Rat> d;
    for (int b = 0; b < t.m_dim; ++b) d.push_back(t.m_weights[b][i]);
    t.m_hmat.push_back(Matrix::diagonal(d));
  }

  // Normalize so [e_gamma, e_{-gamma}] = h_gamma = sum l_i h_i.
  for (int idx = 0; idx < R.num_positive(); ++idx) {
    int th = R.root(idx).parity;
    Matrix br = super_bracket(t.m_emat[idx], th, t.m_fmat[idx], th);
    Matrix target(t.m_dim, t.m_dim);
    for (int i = 0; i < R.rank(); ++i)
      if (R.root(idx).coords[i])
        target = target + t.m_hmat[i] * Rat(R.root(idx).coords[i]);
    // br must be proportional to target; find the ratio at a nonzero slot.
    Rat c;
    bool found = false;
    for (int i = 0; i < t.m_dim && !found; ++i)
      if (sgn(target.at(i, i)) != 0) {
        c = br.at(i, i) / target.at(i, i);
        found = true;
      }
    if (!found || sgn(c) == 0) throw InternalError("degenerate normalization bracket");
    if (br != target * c) throw InternalError("[e,f] not proportional to h_gamma");
    t.m_emat[idx] = t.m_emat[idx] * (1 / c);
  }

  t.derive_table();
  return t;
}

void StructureTable::derive_table() {
  const RootSystem& R = *m_rs;
  std::vector<const Matrix*> basis;
  std::vector<GenSym> syms;
  for (int idx = 0; idx < R.num_positive(); ++idx) {
    basis.push_back(&m_emat[idx]);
    syms.push_back({idx, false});
  }
  for (int idx = 0; idx < R.num_positive(); ++idx) {
    basis.push_back(&m_fmat[idx]);
    syms.push_back({idx, true});
  }
  for (int i = 0; i < R.rank(); ++i) basis.push_back(&m_hmat[i]);
  Decomposer dec(basis, m_dim);

  m_table.clear();
  const int nroots = R.num_positive();
  for (int a = 0; a < 2 * nroots; ++a)
    for (int b = 0; b < 2 * nroots; ++b) {
      GenSym x = syms[a], y = syms[b];
      Matrix br = super_bracket(matrix_of(x), theta(x), matrix_of(y), theta(y));
      BracketValue v;
      if (!br.is_zero()) {
        auto coeffs = dec.decompose(br);
        for (int k = 0; k < 2 * nroots; ++k)
          if (sgn(coeffs[k]) != 0) v.add(syms[k], coeffs[k]);
        v.cartan.assign(R.rank(), Rat(0));
        for (int i = 0; i < R.rank(); ++i) v.cartan[i] = coeffs[2 * nroots + i];
      }
      m_table.emplace(std::make_pair(x, y), std::move(v));
    }
}

StructureTable StructureTable::rescaled(int root_idx, const Rat& c) const {
  if (sgn(c) == 0) throw InternalError("rescale by zero");
  StructureTable t = *this;
  t.m_emat[root_idx] = t.m_emat[root_idx] * c;
  t.m_fmat[root_idx] = t.m_fmat[root_idx] * (1 / c);
  t.derive_table();
  return t;
}

namespace {

GenSym parse_root_symbol(const RootSystem& rs, const std::string& name) {
  // "e(a+b)" or "f(a+b)".
  if (name.size() < 4 || name[1] != '(' || name.back() != ')')
    throw UnknownSymbolError(name);
  bool lowering = name[0] == 'f';
  if (!lowering && name[0] != 'e') throw UnknownSymbolError(name);
  std::string inner = name.substr(2, name.size() - 3);
  for (int idx = 0; idx < rs.num_positive(); ++idx)
    if (rs.root_name(idx) == inner) return {idx, lowering};
  throw UnknownSymbolError(name);
}

}  // namespace

BracketValue StructureTable::bracket_by_name(const std::string& x, const std::string& y) const {
  const RootSystem& R = *m_rs;
  static const char* letters = "abcd";
  auto cartan_index = [&R](const std::string& n) {
    for (int i = 0; i < R.rank(); ++i)
      if (n == std::string("h(") + letters[i] + ")") return i;
    return -1;
  };
  int hx = cartan_index(x), hy = cartan_index(y);
  if (hx >= 0 && hy >= 0) return {};
  if (hx >= 0) {
    GenSym s = parse_root_symbol(R, y);
    BracketValue v;
    v.add(s, cartan_action(hx, s));
    return v;
  }
  if (hy >= 0) {
    GenSym s = parse_root_symbol(R, x);
    BracketValue v;
    v.add(s, -cartan_action(hy, s));  // [e, h] = -[h, e]; root vectors are h-homogeneous
    return v;
  }
  return bracket(parse_root_symbol(R, x), parse_root_symbol(R, y));
}

std::vector<std::string> StructureTable::symbol_names() const {
  static const char* letters = "abcd";
  std::vector<std::string> names;
  for (int idx = 0; idx < m_rs->num_positive(); ++idx)
    names.push_back("e(" + m_rs->root_name(idx) + ")");
  for (int idx = 0; idx < m_rs->num_positive(); ++idx)
    names.push_back("f(" + m_rs->root_name(idx) + ")");
  for (int i = 0; i < m_rs->rank(); ++i) names.push_back(std::string("h(") + letters[i] + ")");
  return names;
}

std::shared_ptr<const StructureTable> realize(const AlgebraSpec& spec) {
  static std::map<std::string, std::shared_ptr<const StructureTable>> cache;
  auto it = cache.find(spec.name);
  if (it != cache.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(build_root_system(spec));
  auto table = std::make_shared<const StructureTable>(StructureTable::build(rs));
  cache.emplace(spec.name, table);
  return table;
}

}  // namespace extremal
