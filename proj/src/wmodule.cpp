#include "extremal/wmodule.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

constexpr int kMaxDim = 200;

void fill_cartan(WeightModule& m) {
  const RootSystem& rs = m.root_system();
  m.hact.clear();
  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<Rat> d;
    d.reserve(m.dim);
    for (int b = 0; b < m.dim; ++b) d.push_back(m.weights[b][i]);
    m.hact.push_back(Matrix::diagonal(d));
  }
}

}  // namespace

std::vector<int> WeightModule::basis_of_weight(const std::vector<Rat>& w) const {
  std::vector<int> out;
  for (int b = 0; b < dim; ++b)
    if (weights[b] == w) out.push_back(b);
  return out;
}

std::vector<std::vector<Rat>> WeightModule::weight_support() const {
  std::set<std::vector<Rat>> s(weights.begin(), weights.end());
  return {s.begin(), s.end()};
}

int WeightModule::depth() const {
  int depth = 0;
  for (int idx = 0; idx < (int)eact.size(); ++idx) {
    Matrix p = Matrix::identity(dim);
    int n = 0;
    while (!p.is_zero()) {
      p = p * eact[idx];
      ++n;
      if (n > dim + 1) throw InternalError("raising operator is not nilpotent");
    }
    depth = std::max(depth, n - 1);
  }
  return depth;
}

WeightModule defining_module(std::shared_ptr<const StructureTable> table) {
  WeightModule m;
  m.table = table;
  m.name = "defining";
  m.dim = table->dim();
  m.parities = table->parities();
  m.weights = table->weights();
  m.gram.assign(m.dim, Rat(1));
  const RootSystem& rs = table->root_system();
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    m.eact.push_back(table->matrix_of({idx, false}));
    m.fact.push_back(table->matrix_of({idx, true}));
  }
  fill_cartan(m);
  return m;
}

WeightModule adjoint_module(std::shared_ptr<const StructureTable> table) {
  const RootSystem& rs = table->root_system();
  const int p = rs.num_positive();
  WeightModule m;
  m.table = table;
  m.name = "adjoint";
  m.dim = 2 * p + rs.rank();
  if (m.dim > kMaxDim) throw TooLargeError("adjoint dimension " + std::to_string(m.dim));
  // Basis: e_0..e_{p-1}, f_0..f_{p-1}, h_1..h_r.
  auto basis_sym = [p](int b) -> GenSym {
    if (b < p) return {b, false};
    return {b - p, true};
  };
  for (int b = 0; b < m.dim; ++b) {
    if (b < 2 * p) {
      GenSym s = basis_sym(b);
      m.parities.push_back(rs.root(s.root).parity);
      auto mu = rs.mu_of(s.root);
      if (s.lowering)
        for (auto& v : mu) v = -v;
      m.weights.push_back(mu);
    } else {
      m.parities.push_back(0);
      m.weights.push_back(std::vector<Rat>(rs.rank(), Rat(0)));
    }
  }
  m.gram.assign(m.dim, Rat(1));
  auto ad_matrix = [&](GenSym x) {
    Matrix mat(m.dim, m.dim);
    for (int b = 0; b < m.dim; ++b) {
      if (b < 2 * p) {
        const BracketValue& v = table->bracket(x, basis_sym(b));
        for (const auto& [s, c] : v.vectors) {
          int row = s.lowering ? p + s.root : s.root;
          mat.at(row, b) = c;
        }
        for (int i = 0; i < (int)v.cartan.size(); ++i) mat.at(2 * p + i, b) = v.cartan[i];
      } else {
        // [x, h_i] = -(alpha_i, wt x) x.
        int i = b - 2 * p;
        int row = x.lowering ? p + x.root : x.root;
        mat.at(row, b) = -table->cartan_action(i, x);
      }
    }
    return mat;
  };
  for (int idx = 0; idx < p; ++idx) {
    m.eact.push_back(ad_matrix({idx, false}));
    m.fact.push_back(ad_matrix({idx, true}));
  }
  fill_cartan(m);
  return m;
}

WeightModule spin_module(std::shared_ptr<const StructureTable> table, const Rat& j) {
  const RootSystem& rs = table->root_system();
  if (rs.spec.family != Family::A || rs.rank() != 1)
    throw UnsupportedAlgebraError("spin modules require A1, got " + rs.spec.name);
  Rat twoj = 2 * j;
  if (!is_integer(twoj) || sgn(twoj) < 0) throw Error("spin must be a nonnegative half-integer");
  long n2j = twoj.get_num().get_si();
  if (n2j + 1 > kMaxDim) throw TooLargeError("spin module dimension " + std::to_string(n2j + 1));
  WeightModule m;
  m.table = table;
  {
    std::ostringstream os;
    os << "spin(" << rat_str(j) << ")";
    m.name = os.str();
  }
  m.dim = (int)n2j + 1;
  m.parities.assign(m.dim, 0);
  Matrix e(m.dim, m.dim), f(m.dim, m.dim);
  Rat binom = 1;
  for (int k = 0; k < m.dim; ++k) {
    m.weights.push_back({twoj - 2 * k});
    m.gram.push_back(binom);  // C(2j, k)
    binom = binom * (twoj - k) / (k + 1);
    if (k > 0) e.at(k - 1, k) = twoj - (k - 1);
    if (k + 1 < m.dim) f.at(k + 1, k) = k + 1;
  }
  m.eact.push_back(e);
  m.fact.push_back(f);
  fill_cartan(m);
  return m;
}

WeightModule tensor_module(const WeightModule& a, const WeightModule& b) {
  if (a.table != b.table) throw Error("tensor factors over different algebras");
  WeightModule m;
  m.table = a.table;
  m.name = a.name + "*" + b.name;
  m.dim = a.dim * b.dim;
  if (m.dim > kMaxDim) throw TooLargeError("tensor dimension " + std::to_string(m.dim));
  const RootSystem& rs = a.root_system();
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < b.dim; ++k) {
      m.parities.push_back((a.parities[i] + b.parities[k]) & 1);
      std::vector<Rat> w = a.weights[i];
      for (int v = 0; v < rs.rank(); ++v) w[v] += b.weights[k][v];
      m.weights.push_back(std::move(w));
      m.gram.push_back(a.gram[i] * b.gram[k]);
    }
  auto tensor_act = [&](const Matrix& xa, const Matrix& xb, int theta) {
    Matrix mat(m.dim, m.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int k = 0; k < b.dim; ++k) {
        int col = i * b.dim + k;
        for (int i2 = 0; i2 < a.dim; ++i2)
          if (sgn(xa.at(i2, i)) != 0) mat.at(i2 * b.dim + k, col) += xa.at(i2, i);
        Rat sign = (theta & a.parities[i]) ? -1 : 1;
        for (int k2 = 0; k2 < b.dim; ++k2)
          if (sgn(xb.at(k2, k)) != 0) mat.at(i * b.dim + k2, col) += sign * xb.at(k2, k);
      }
    return mat;
  };
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    int theta = rs.root(idx).parity;
    m.eact.push_back(tensor_act(a.eact[idx], b.eact[idx], theta));
    m.fact.push_back(tensor_act(a.fact[idx], b.fact[idx], theta));
  }
  fill_cartan(m);
  return m;
}

WeightModule build_module(std::shared_ptr<const StructureTable> table, const std::string& kind) {
  // '*'-separated tensor factors.
  std::vector<std::string> parts;
  std::string cur;
  for (char c : kind) {
    if (c == '*') {
      parts.push_back(cur);
      cur.clear();
    } else if (!isspace((unsigned char)c)) {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  auto single = [&table](const std::string& s) {
    if (s == "defining") return defining_module(table);
    if (s == "adjoint") return adjoint_module(table);
    if (s.rfind("spin(", 0) == 0 && s.back() == ')')
      return spin_module(table, rat_parse(s.substr(5, s.size() - 6)));
    throw Error("unknown module kind: " + s);
  };
  WeightModule m = single(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i) m = tensor_module(m, single(parts[i]));
  return m;
}

Matrix joint_raising_kernel(const WeightModule& m) {
  const RootSystem& rs = m.root_system();
  Matrix stacked((int)rs.simple_index.size() * m.dim, m.dim);
  for (int s = 0; s < (int)rs.simple_index.size(); ++s) {
    const Matrix& e = m.eact[rs.simple_index[s]];
    for (int i = 0; i < m.dim; ++i)
      for (int k = 0; k < m.dim; ++k) stacked.at(s * m.dim + i, k) = e.at(i, k);
  }
  return stacked.kernel_basis();
}

std::vector<Rat> su2_spectrum(const WeightModule& m) {
  const RootSystem& rs = m.root_system();
  if (rs.spec.family != Family::A || rs.rank() != 1)
    throw UnsupportedAlgebraError("su2_spectrum requires A1");
  // Multiplicity of spin j is d_j - d_{j+1} over weight multiplicities d.
  std::map<Rat, int> mult;  // key: 2*m_z
  for (const auto& w : m.weights) ++mult[w[0]];
  std::vector<Rat> spins;
  for (const auto& [twom, d] : mult) {
    if (sgn(twom) < 0) continue;
    auto up = mult.find(twom + 2);
    int dup = up == mult.end() ? 0 : up->second;
    if (d > dup) spins.push_back(twom / 2);
  }
  std::sort(spins.begin(), spins.end());
  return spins;
}

Matrix su2_casimir(const WeightModule& m) {
  const Matrix& e = m.eact[0];
  const Matrix& f = m.fact[0];
  const Matrix& h = m.hact[0];
  Matrix j0 = h * Rat(1, 2);
  return f * e + j0 * j0 + j0;
}

Matrix casimir_projector_su2(const WeightModule& m, const Rat& j) {
  auto spins = su2_spectrum(m);
  if (std::find(spins.begin(), spins.end(), j) == spins.end())
    throw SpinAbsentError("spin " + rat_str(j) + " in module " + m.name);
  Matrix c = su2_casimir(m);
  Matrix p = Matrix::identity(m.dim);
  Rat target = j * (j + 1);
  for (const Rat& jp : spins) {
    if (jp == j) continue;
    Rat ev = jp * (jp + 1);
    p = p * ((c - Matrix::identity(m.dim) * ev) * (1 / (target - ev)));
  }
  return p;
}

}  // namespace extremal
