#include "extremal/projector.hpp"

#include <algorithm>
#include <chrono>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

int max_coord(const Root& g) {
  int m = 0;
  for (int c : g.coords) m = std::max(m, c);
  return m;
}

}  // namespace

TaylorElement projector_factor(const TaylorAlgebra& alg, int root_idx) {
  const RootSystem& rs = alg.root_system();
  const Root& g = rs.root(root_idx);
  const int nv = alg.nvars();
  const RhoMode mode = alg.rho_mode();
  const int nmax = max_coord(g) ? alg.grade() / max_coord(g) : 0;
  TaylorElement out = alg.zero();

  switch (g.color) {
    case RootColor::White: {
      // sum (-1)^n / n!  phi_{g,n} e_{-g}^n e_g^n.
      CartanRational phi = CartanRational::one(nv);
      Rat pref = 1;
      for (int n = 0; n <= nmax; ++n) {
        if (n > 0) {
          pref = -pref / n;
          phi = phi * inverse_root_form(rs, root_idx, g.norm / 2 * n, mode);
        }
        out = alg.add(out, alg.balanced_power(root_idx, n, phi * pref));
      }
      break;
    }
    case RootColor::Grey: {
      // Exact two-term factor 1 - (h_g + rho(g))^{-1} e_{-g} e_g.
      out = alg.add(alg.one(),
                    alg.balanced_power(root_idx, 1,
                                       -inverse_root_form(rs, root_idx, 0, mode)));
      break;
    }
    case RootColor::Dark: {
      // Even strand 2^{-n}/n! prod_{k=1}^{n}(h+rho+(g,g)(k-1)/2)^{-1} at power 2n,
      // odd strand -2^{-n}/n! prod_{k=1}^{n+1}(h+rho+(g,g)k/2)^{-1} at power 2n+1.
      Rat inv_fact = 1;
      CartanRational even_phi = CartanRational::one(nv);
      CartanRational odd_phi = inverse_root_form(rs, root_idx, g.norm / 2, mode);
      Rat two_pow = 1;
      for (int n = 0; 2 * n <= nmax; ++n) {
        if (n > 0) {
          inv_fact /= n;
          two_pow /= 2;
          even_phi = even_phi * inverse_root_form(rs, root_idx, g.norm / 2 * (n - 1), mode);
          odd_phi = odd_phi * inverse_root_form(rs, root_idx, g.norm / 2 * (n + 1), mode);
        }
        out = alg.add(out, alg.balanced_power(root_idx, 2 * n, even_phi * (inv_fact * two_pow)));
        if (2 * n + 1 <= nmax)
          out = alg.add(out,
                        alg.balanced_power(root_idx, 2 * n + 1,
                                           odd_phi * (-inv_fact * two_pow)));
      }
      break;
    }
  }
  return out;
}

TaylorElement build_projector(const TaylorAlgebra& alg) {
  TaylorElement p = alg.one();
  for (int idx : alg.ordering().roots) p = alg.multiply(p, projector_factor(alg, idx));
  return p;
}

ProjectorReport verify_projector(const TaylorAlgebra& alg, const TaylorElement& p,
                                 int check_grade) {
  auto t0 = std::chrono::steady_clock::now();
  const RootSystem& rs = alg.root_system();
  ProjectorReport rep;
  rep.algebra = rs.spec.name;
  rep.ordering = alg.ordering().roots;
  rep.checked_grade = check_grade;
  rep.built_grade = p.grade;
  rep.right_checked_grade = std::min(check_grade, p.grade - 1);
  if (p.grade < check_grade) throw TruncationMismatchError("projector built below the check grade");

  rep.leading_ok = p.leading(alg.nvars()).is_one();

  auto residual_grade = [&alg](const TaylorElement& x, int limit) {
    int worst = -1;
    for (const auto& [m, c] : x.terms) {
      int g = alg.raising_grade(m);
      if (g <= limit && (worst < 0 || g < worst)) worst = g;
    }
    return worst;  // -1 when clean
  };

  static const char* letters = "abcd";
  for (int i = 0; i < rs.rank(); ++i) {
    GenSym e{rs.simple_index[i], false}, f{rs.simple_index[i], true};
    int ge = residual_grade(alg.multiply(alg.generator(e), p), check_grade);
    if (ge >= 0)
      rep.residuals.push_back({std::string("e(") + letters[i] + ")*P", ge});
    int gf = residual_grade(alg.multiply(p, alg.generator(f)), rep.right_checked_grade);
    if (gf >= 0)
      rep.residuals.push_back({std::string("P*f(") + letters[i] + ")", gf});
  }
  int gi = residual_grade(alg.subtract(alg.multiply(p, p), p), check_grade);
  if (gi >= 0) rep.residuals.push_back({"P*P-P", gi});

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<CartanRational> su2_closed_form(int N) {
  // C_n(j) = (-1)^n / n! * prod_{k=1}^n (2j + 1 + k)^{-1}, variable 0 = j.
  std::vector<CartanRational> c;
  CartanRational cur = CartanRational::one(1);
  Rat pref = 1;
  c.push_back(cur);
  for (int n = 1; n <= N; ++n) {
    pref = -pref / n;
    auto [form, scale] = LinearForm::normalized({Rat(2)}, Rat(1 + n));
    cur = cur * (CartanRational::inverse_form(form) * (1 / scale));
    c.push_back(cur * pref);
  }
  return c;
}

std::vector<CartanRational> shapiro_ansatz_solve(int N) {
  // Work in the su(2) Taylor algebra; the engine supplies the recursion
  // coefficients, the closed form is never consulted.
  auto table = realize(AlgebraSpec::parse("A1"));
  const RootSystem& rs = table->root_system();
  NormalOrdering o{{rs.simple_index[0]}};
  TaylorAlgebra alg(table, o, N + 2);
  GenSym e{rs.simple_index[0], false};
  std::vector<Rat> mu_alpha = rs.mu_of(rs.simple_index[0]);

  std::vector<CartanRational> c;  // in variable h first
  c.push_back(CartanRational::one(1));
  for (int n = 0; n < N; ++n) {
    // Coefficient of f^n e^{n+1} in  e * (C_n f^n e^n)  and in  e * (f^{n+1} e^{n+1}).
    PbwMonomial probe{{n}, {n + 1}};
    TaylorElement lhs = alg.multiply(alg.generator(e), alg.balanced_power(rs.simple_index[0], n, c[n]));
    auto itu = lhs.terms.find(probe);
    CartanRational u = itu == lhs.terms.end() ? CartanRational::zero(1) : itu->second;
    TaylorElement nxt = alg.multiply(
        alg.generator(e), alg.balanced_power(rs.simple_index[0], n + 1, CartanRational::one(1)));
    auto itw = nxt.terms.find(probe);
    if (itw == nxt.terms.end()) throw InternalError("shapiro recursion lost its pivot");
    // u + shift(C_{n+1}) * w = 0, where the shift moves C_{n+1} left past e.
    CartanRational shifted = -(u * itw->second.inverse());
    std::vector<Rat> back = {mu_alpha[0]};
    c.push_back(shifted.shifted(back));
  }
  // Express in j via h = 2j.
  for (auto& f : c) f = f.with_scaled_var(0, 2, 0);
  return c;
}

ProjectionResult project(const TaylorAlgebra& alg, const TaylorElement& p,
                         const WeightModule& m) {
  ProjectionResult r;
  r.matrix = alg.apply(p, m);
  r.image = r.matrix.column_space_basis();
  return r;
}

std::vector<CgEntry> cg_su2(const Rat& j1, const Rat& j2, const Rat& j) {
  if (j < abs(j1 - j2) || j > j1 + j2 || !is_integer(j1 + j2 - j) || sgn(j) < 0)
    throw InvalidTriangleError(rat_str(j1) + "," + rat_str(j2) + "," + rat_str(j));
  auto table = realize(AlgebraSpec::parse("A1"));
  const RootSystem& rs = table->root_system();
  WeightModule mod = tensor_module(spin_module(table, j1), spin_module(table, j2));
  const long dim2 = Rat(2 * j2).get_num().get_si() + 1;

  NormalOrdering o{{rs.simple_index[0]}};
  TaylorAlgebra alg(table, o, mod.depth());
  TaylorElement p = build_projector(alg);

  // Highest-weight vector of the spin-j string: image of the projector on the
  // weight-2j block.
  std::vector<int> block = mod.basis_of_weight({2 * j});
  if (block.empty()) throw SpinAbsentError(rat_str(j));
  Matrix pb = alg.apply_on_columns(p, mod, block);
  // Square block (weight is preserved).
  Matrix sq((int)block.size(), (int)block.size());
  for (int r = 0; r < (int)block.size(); ++r)
    for (int c = 0; c < (int)block.size(); ++c) sq.at(r, c) = pb.at(block[r], c);
  Matrix img = sq.column_space_basis();
  if (img.cols() != 1) throw InternalError("top-weight image is not one-dimensional");
  std::vector<Rat> u(mod.dim, Rat(0));
  for (int r = 0; r < (int)block.size(); ++r) u[block[r]] = img.at(r, 0);

  // Condon-Shortley: the maximal-m1 component positive.  Basis index is
  // k1 * dim2 + k2 with m1 = j1 - k1, so the smallest k1 wins.
  {
    int best = -1;
    for (int b = 0; b < mod.dim; ++b)
      if (sgn(u[b]) != 0 && best < 0) best = b;
    if (best < 0) throw InternalError("vanishing top-weight vector");
    if (sgn(u[best]) < 0)
      for (auto& v : u) v = -v;
  }

  const Matrix& f = mod.fact[0];
  std::vector<CgEntry> out;
  for (Rat m = j; m >= -j; m -= 1) {
    Rat norm2 = 0;
    for (int b = 0; b < mod.dim; ++b) norm2 += u[b] * u[b] * mod.gram[b];
    if (sgn(norm2) == 0) throw InternalError("vanishing string norm");
    for (int b = 0; b < mod.dim; ++b) {
      if (sgn(u[b]) == 0) continue;
      CgEntry e;
      e.m = m;
      e.m1 = j1 - b / dim2;
      e.m2 = j2 - b % dim2;
      e.sign = sgn(u[b]);
      e.value_sq = u[b] * u[b] * mod.gram[b] / norm2;
      out.push_back(e);
    }
    std::vector<Rat> next = f.apply(u);
    u = std::move(next);
  }
  return out;
}

}  // namespace extremal
