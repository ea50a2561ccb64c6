#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "extremal/errors.hpp"
#include "extremal/rootsys.hpp"

using namespace extremal;

namespace {

std::set<std::vector<int>> coord_set(const RootSystem& rs) {
  std::set<std::vector<int>> s;
  for (const auto& r : rs.positive) s.insert(r.coords);
  return s;
}

// rho as the pairing with the super half-sum (half even minus half odd).
Rat half_sum_rho(const RootSystem& rs, int idx) {
  std::vector<Rat> rho_vec(rs.rank(), Rat(0));
  for (const auto& r : rs.positive)
    for (int i = 0; i < rs.rank(); ++i)
      rho_vec[i] += Rat(r.coords[i]) * (r.parity ? Rat(-1, 2) : Rat(1, 2));
  Rat acc = 0;
  const auto& l = rs.root(idx).coords;
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) acc += rho_vec[i] * rs.bilinear[i][j] * l[j];
  return acc;
}

void check_consistency(const std::string& name) {
  CAPTURE(name);
  auto rs = build_root_system(AlgebraSpec::parse(name));
  for (int i = 0; i < rs.num_positive(); ++i) {
    const Root& g = rs.root(i);
    // Norm field matches the bilinear form.
    CHECK(g.norm == rs.pairing(i, i));
    for (int c : g.coords) CHECK(c >= 0);
    // Color rules.
    std::vector<int> dbl = g.coords;
    for (auto& v : dbl) v *= 2;
    bool has_double = rs.find(dbl) >= 0;
    switch (g.color) {
      case RootColor::White:
        CHECK(g.parity == 0);
        CHECK(g.norm != 0);
        break;
      case RootColor::Grey:
        CHECK(g.parity == 1);
        CHECK(g.norm == 0);
        CHECK(!has_double);
        break;
      case RootColor::Dark:
        CHECK(g.parity == 1);
        CHECK(g.norm != 0);
        CHECK(has_double);
        break;
    }
    // rho agrees with the (super) half-sum pairing.
    CHECK(rs.rho(i) == half_sum_rho(rs, i));
  }
  // Simple roots carry rho(alpha) = (alpha,alpha)/2.
  for (int i = 0; i < rs.rank(); ++i)
    CHECK(rs.rho(rs.simple_index[i]) == rs.bilinear[i][i] / 2);
}

}  // namespace

TEST_CASE("A2 positive system") {
  auto rs = build_root_system(AlgebraSpec::parse("A2"));
  CHECK(rs.num_positive() == 3);
  CHECK(coord_set(rs) == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
  for (const auto& r : rs.positive) CHECK(r.color == RootColor::White);
  CHECK(rs.reduced_positive_roots().size() == 3);  // identical to positive set
}

TEST_CASE("G2 positive system") {
  auto rs = build_root_system(AlgebraSpec::parse("G2"));
  CHECK(rs.num_positive() == 6);
  CHECK(coord_set(rs) ==
        std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("B2 positive system") {
  auto rs = build_root_system(AlgebraSpec::parse("B2"));
  CHECK(rs.num_positive() == 4);
  CHECK(coord_set(rs) == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {1, 2}});
}

TEST_CASE("osp(1|2) system and reduction") {
  auto rs = build_root_system(AlgebraSpec::parse("osp(1|2)"));
  REQUIRE(rs.num_positive() == 2);
  int beta = rs.find({1}), beta2 = rs.find({2});
  REQUIRE(beta >= 0);
  REQUIRE(beta2 >= 0);
  CHECK(rs.root(beta).color == RootColor::Dark);
  CHECK(rs.root(beta2).color == RootColor::White);
  CHECK(rs.root(beta2).norm == 4 * rs.root(beta).norm);
  auto red = rs.reduced_positive_roots();
  REQUIRE(red.size() == 1);
  CHECK(red[0].coords == std::vector<int>{1});
}

TEST_CASE("gl(1|1) grey root") {
  auto rs = build_root_system(AlgebraSpec::parse("gl(1|1)"));
  REQUIRE(rs.num_positive() == 1);
  CHECK(rs.root(0).color == RootColor::Grey);
  CHECK(rs.root(0).norm == 0);
  CHECK(rs.rho(0) == 0);
  auto red = rs.reduced_positive_roots();
  CHECK(red.size() == 1);  // no doubled roots to remove
}

TEST_CASE("gl(2|1) colors") {
  auto rs = build_root_system(AlgebraSpec::parse("gl(2|1)"));
  CHECK(rs.num_positive() == 3);
  CHECK(rs.root(rs.find({1, 0})).color == RootColor::White);
  CHECK(rs.root(rs.find({0, 1})).color == RootColor::Grey);
  CHECK(rs.root(rs.find({1, 1})).color == RootColor::Grey);
}

TEST_CASE("rho values") {
  auto su2 = build_root_system(AlgebraSpec::parse("A1"));
  CHECK(su2.rho(su2.simple_index[0]) == 1);
  auto a2 = build_root_system(AlgebraSpec::parse("A2"));
  CHECK(rho_value(a2, a2.root(a2.find({1, 1}))) == 2);
  Root bogus;
  bogus.coords = {5, 5};
  CHECK_THROWS_AS(rho_value(a2, bogus), UnknownRootError);
}

TEST_CASE("consistency across supported algebras") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D2",
                           "D3", "D4", "G2", "gl(1|1)", "gl(2|1)", "gl(1|2)", "osp(1|2)"})
    check_consistency(name);
}

TEST_CASE("unsupported algebras are rejected") {
  CHECK_THROWS_AS(AlgebraSpec::parse("E8"), UnsupportedAlgebraError);
  CHECK_THROWS_AS(AlgebraSpec::parse("B9"), UnsupportedAlgebraError);
  CHECK_THROWS_AS(AlgebraSpec::parse("gl(2|2)"), UnsupportedAlgebraError);
}

TEST_CASE("deterministic root order") {
  auto a = build_root_system(AlgebraSpec::parse("B3"));
  auto b = build_root_system(AlgebraSpec::parse("B3"));
  REQUIRE(a.num_positive() == b.num_positive());
  for (int i = 0; i < a.num_positive(); ++i) CHECK(a.root(i).coords == b.root(i).coords);
  // Heights never decrease along the stored order.
  for (int i = 0; i + 1 < a.num_positive(); ++i)
    CHECK(a.root(i).height() <= a.root(i + 1).height());
}

TEST_CASE("A1xA1 alias") {
  auto rs = build_root_system(AlgebraSpec::parse("A1xA1"));
  CHECK(rs.num_positive() == 2);
  CHECK(rs.pairing(0, 1) == 0);
}
