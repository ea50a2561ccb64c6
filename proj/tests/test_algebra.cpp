#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "extremal/algebra.hpp"
#include "extremal/errors.hpp"

using namespace extremal;

namespace {

std::vector<int> weight_of(const RootSystem& rs, GenSym s) {
  std::vector<int> w = rs.root(s.root).coords;
  if (s.lowering)
    for (auto& v : w) v = -v;
  return w;
}

// [x, v] extended linearly over a bracket value (including its Cartan part).
BracketValue bracket_left(const StructureTable& t, GenSym x, const BracketValue& v) {
  BracketValue out;
  for (const auto& [s, c] : v.vectors) {
    const BracketValue& b = t.bracket(x, s);
    for (const auto& [s2, c2] : b.vectors) out.add(s2, c * c2);
    for (int i = 0; i < (int)b.cartan.size(); ++i) out.add_cartan(i, c * b.cartan[i]);
  }
  // [x, h_i] = -(alpha_i, wt(x)) x.
  for (int i = 0; i < (int)v.cartan.size(); ++i)
    out.add(x, -v.cartan[i] * t.cartan_action(i, x));
  return out;
}

// [v, z] with the bracket value on the left.
BracketValue bracket_right(const StructureTable& t, const BracketValue& v, GenSym z) {
  BracketValue out;
  for (const auto& [s, c] : v.vectors) {
    const BracketValue& b = t.bracket(s, z);
    for (const auto& [s2, c2] : b.vectors) out.add(s2, c * c2);
    for (int i = 0; i < (int)b.cartan.size(); ++i) out.add_cartan(i, c * b.cartan[i]);
  }
  // [h_i, z] = (alpha_i, wt(z)) z.
  for (int i = 0; i < (int)v.cartan.size(); ++i)
    out.add(z, v.cartan[i] * t.cartan_action(i, z));
  return out;
}

void subtract(BracketValue& a, const BracketValue& b) {
  for (const auto& [s, c] : b.vectors) a.add(s, -c);
  for (int i = 0; i < (int)b.cartan.size(); ++i) a.add_cartan(i, -b.cartan[i]);
}

void check_algebra(const std::string& name) {
  CAPTURE(name);
  auto table = realize(AlgebraSpec::parse(name));
  const RootSystem& rs = table->root_system();
  std::vector<GenSym> syms;
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    syms.push_back({idx, false});
    syms.push_back({idx, true});
  }

  for (GenSym x : syms) {
    for (GenSym y : syms) {
      const BracketValue& b = table->bracket(x, y);
      // Graded antisymmetry.
      BracketValue rev = table->bracket(y, x);
      rev.scale((table->theta(x) & table->theta(y)) ? Rat(1) : Rat(-1));
      CHECK(b.vectors == rev.vectors);
      CHECK(b.cartan == rev.cartan);
      // Weight conservation: every output symbol carries wt(x)+wt(y); the
      // Cartan part appears only at weight zero.
      std::vector<int> wsum = weight_of(rs, x);
      auto wy = weight_of(rs, y);
      for (size_t i = 0; i < wsum.size(); ++i) wsum[i] += wy[i];
      for (const auto& [s, c] : b.vectors) CHECK(weight_of(rs, s) == wsum);
      bool zero_weight = true;
      for (int v : wsum) zero_weight = zero_weight && v == 0;
      if (!zero_weight)
        for (const auto& c : b.cartan) CHECK(c == 0);
    }
    // Normalization witness: [e_gamma, e_{-gamma}] = h_gamma.
    if (!x.lowering) {
      const BracketValue& b = table->bracket(x, {x.root, true});
      CHECK(b.vectors.empty());
      REQUIRE((int)b.cartan.size() == rs.rank());
      for (int i = 0; i < rs.rank(); ++i) CHECK(b.cartan[i] == rs.root(x.root).coords[i]);
    }
  }

  // Super Jacobi in Leibniz form: [x,[y,z]] = [[x,y],z] + (-1)^{tx ty}[y,[x,z]].
  for (GenSym x : syms)
    for (GenSym y : syms)
      for (GenSym z : syms) {
        BracketValue lhs = bracket_left(*table, x, table->bracket(y, z));
        BracketValue r1 = bracket_right(*table, table->bracket(x, y), z);
        BracketValue r2 = bracket_left(*table, y, table->bracket(x, z));
        r2.scale((table->theta(x) & table->theta(y)) ? Rat(-1) : Rat(1));
        subtract(lhs, r1);
        subtract(lhs, r2);
        CHECK(lhs.is_zero());
      }
}

}  // namespace

TEST_CASE("gl(3) matrix-unit brackets") {
  auto t = realize(AlgebraSpec::parse("A2"));
  const RootSystem& rs = t->root_system();
  GenSym ea{rs.find({1, 0}), false}, eb{rs.find({0, 1}), false};
  const BracketValue& b = t->bracket(ea, eb);
  REQUIRE(b.vectors.size() == 1);
  CHECK(b.vectors[0].first == GenSym{rs.find({1, 1}), false});
  CHECK(b.vectors[0].second == 1);
}

TEST_CASE("su(2) normalization") {
  auto t = realize(AlgebraSpec::parse("A1"));
  const RootSystem& rs = t->root_system();
  GenSym e{rs.simple_index[0], false}, f{rs.simple_index[0], true};
  const BracketValue& b = t->bracket(e, f);
  CHECK(b.vectors.empty());
  CHECK(b.cartan == std::vector<Rat>{Rat(1)});
  // [h, e] = (alpha, alpha) e = 2 e.
  CHECK(t->cartan_action(0, e) == 2);
}

TEST_CASE("osp(1|2) odd square") {
  auto t = realize(AlgebraSpec::parse("osp(1|2)"));
  const RootSystem& rs = t->root_system();
  GenSym eb{rs.find({1}), false};
  const BracketValue& b = t->bracket(eb, eb);  // anticommutator of the odd root
  REQUIRE(b.vectors.size() == 1);
  CHECK(b.vectors[0].first == GenSym{rs.find({2}), false});
  CHECK(b.vectors[0].second != 0);
  // The constant under this realization's normalization.
  CHECK(b.vectors[0].second == Rat(-1));
  CHECK(t->parities() == std::vector<int>{0, 1, 0});
}

TEST_CASE("bracket_by_name surface") {
  auto t = realize(AlgebraSpec::parse("A2"));
  // Cartan action by weight: [h_a, e(b)] = (alpha,beta) e(b) = -e(b).
  BracketValue v = t->bracket_by_name("h(a)", "e(b)");
  REQUIRE(v.vectors.size() == 1);
  CHECK(v.vectors[0].second == Rat(-1));
  // Even square vanishes.
  CHECK(t->bracket_by_name("e(a)", "e(a)").is_zero());
  // [e(a+b), f(b)] is a nonzero rational multiple of e(a).
  BracketValue w = t->bracket_by_name("e(a+b)", "f(b)");
  REQUIRE(w.vectors.size() == 1);
  CHECK(w.vectors[0].first == GenSym{t->root_system().find({1, 0}), false});
  CHECK(w.vectors[0].second != 0);
  CHECK_THROWS_AS(t->bracket_by_name("e(zz)", "e(a)"), UnknownSymbolError);
}

TEST_CASE("structure tables: antisymmetry, weights, Jacobi") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D2", "D3", "G2",
                           "gl(1|1)", "gl(2|1)", "gl(1|2)", "osp(1|2)"})
    check_algebra(name);
}

TEST_CASE("rescaled tables keep the normalization") {
  auto t = realize(AlgebraSpec::parse("B2"));
  const RootSystem& rs = t->root_system();
  StructureTable t2 = t->rescaled(rs.find({1, 1}), Rat(7, 3));
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    const BracketValue& b = t2.bracket({idx, false}, {idx, true});
    CHECK(b.vectors.empty());
    for (int i = 0; i < rs.rank(); ++i) CHECK(b.cartan[i] == rs.root(idx).coords[i]);
  }
}
