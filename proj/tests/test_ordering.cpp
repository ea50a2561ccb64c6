#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "extremal/errors.hpp"
#include "extremal/ordering.hpp"
#include "oracles.hpp"

using namespace extremal;

namespace {

std::vector<int> seq_of(const RootSystem& rs, const std::vector<std::vector<int>>& coords) {
  std::vector<int> seq;
  for (const auto& c : coords) {
    int idx = rs.find(c);
    REQUIRE(idx >= 0);
    seq.push_back(idx);
  }
  return seq;
}

}  // namespace

TEST_CASE("validate on A2") {
  auto rs = build_root_system(AlgebraSpec::parse("A2"));
  CHECK(validate_ordering(seq_of(rs, {{1, 0}, {1, 1}, {0, 1}}), rs));
  CHECK(validate_ordering(seq_of(rs, {{0, 1}, {1, 1}, {1, 0}}), rs));
  CHECK_FALSE(validate_ordering(seq_of(rs, {{1, 0}, {0, 1}, {1, 1}}), rs));
  CHECK_THROWS_AS(validate_ordering(seq_of(rs, {{1, 0}, {1, 0}, {0, 1}}), rs),
                  NotAPermutationError);
}

TEST_CASE("validate on B2") {
  auto rs = build_root_system(AlgebraSpec::parse("B2"));
  CHECK(validate_ordering(seq_of(rs, {{0, 1}, {1, 2}, {1, 1}, {1, 0}}), rs));
  CHECK(validate_ordering(seq_of(rs, {{1, 0}, {1, 1}, {1, 2}, {0, 1}}), rs));
  CHECK_FALSE(validate_ordering(seq_of(rs, {{1, 0}, {1, 2}, {1, 1}, {0, 1}}), rs));
}

TEST_CASE("enumerate counts match the listed rank-2 pairs") {
  CHECK(enumerate_orderings(build_root_system(AlgebraSpec::parse("A1xA1"))).size() == 2);
  CHECK(enumerate_orderings(build_root_system(AlgebraSpec::parse("A2"))).size() == 2);
  CHECK(enumerate_orderings(build_root_system(AlgebraSpec::parse("B2"))).size() == 2);
  CHECK(enumerate_orderings(build_root_system(AlgebraSpec::parse("G2"))).size() == 2);
  CHECK(enumerate_orderings(build_root_system(AlgebraSpec::parse("A3"))).size() == 16);
}

TEST_CASE("enumerate equals the brute-force permutation oracle") {
  for (const char* name : {"A1", "A1xA1", "A2", "B2", "C2", "G2", "A3", "gl(2|1)", "osp(1|2)"}) {
    CAPTURE(name);
    auto rs = build_root_system(AlgebraSpec::parse(name));
    auto fast = enumerate_orderings(rs);
    auto brute = oracles::permutation_orderings(rs);
    REQUIRE(fast.size() == brute.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].roots == brute[i]);
  }
}

TEST_CASE("G2 listed pair") {
  auto rs = build_root_system(AlgebraSpec::parse("G2"));
  auto all = enumerate_orderings(rs);
  REQUIRE(all.size() == 2);
  std::vector<int> first = seq_of(rs, {{1, 0}, {1, 1}, {2, 3}, {1, 2}, {1, 3}, {0, 1}});
  std::vector<int> second = first;
  std::reverse(second.begin(), second.end());
  CHECK(((all[0].roots == first && all[1].roots == second) ||
         (all[0].roots == second && all[1].roots == first)));
}

TEST_CASE("elementary inversions") {
  auto a2 = build_root_system(AlgebraSpec::parse("A2"));
  NormalOrdering o{seq_of(a2, {{1, 0}, {1, 1}, {0, 1}})};
  auto inv = elementary_inversions(o, a2);
  REQUIRE(inv.size() == 1);
  CHECK(inv[0].roots == seq_of(a2, {{0, 1}, {1, 1}, {1, 0}}));

  auto b2 = build_root_system(AlgebraSpec::parse("B2"));
  NormalOrdering ob{seq_of(b2, {{1, 0}, {1, 1}, {1, 2}, {0, 1}})};
  auto invb = elementary_inversions(ob, b2);
  REQUIRE(invb.size() == 1);
  CHECK(invb[0].roots == seq_of(b2, {{0, 1}, {1, 2}, {1, 1}, {1, 0}}));

  auto d2 = build_root_system(AlgebraSpec::parse("A1xA1"));
  NormalOrdering od{{d2.reduced_index[0], d2.reduced_index[1]}};
  auto invd = elementary_inversions(od, d2);
  REQUIRE(invd.size() == 1);
  CHECK(invd[0].roots == std::vector<int>{d2.reduced_index[1], d2.reduced_index[0]});
}

TEST_CASE("inversion symmetry and connectivity") {
  for (const char* name : {"A1xA1", "A2", "B2", "G2", "A3"}) {
    CAPTURE(name);
    auto rs = build_root_system(AlgebraSpec::parse(name));
    auto all = enumerate_orderings(rs);
    for (const auto& o : all)
      for (const auto& nb : elementary_inversions(o, rs)) {
        auto back = elementary_inversions(nb, rs);
        CHECK(std::find(back.begin(), back.end(), o) != back.end());
      }
    CHECK(inversion_connected(rs));
  }
}

TEST_CASE("canonical ordering") {
  auto rs = build_root_system(AlgebraSpec::parse("A3"));
  auto c = canonical_ordering(rs);
  CHECK(validate_ordering(c.roots, rs));
  CHECK(c == enumerate_orderings(rs).front());
  // Above the enumeration limit the greedy search still works.
  auto b4 = build_root_system(AlgebraSpec::parse("B4"));
  CHECK(validate_ordering(canonical_ordering(b4).roots, b4));
  CHECK_THROWS_AS(enumerate_orderings(b4), TooLargeError);
}

TEST_CASE("single-root systems") {
  for (const char* name : {"A1", "gl(1|1)", "osp(1|2)"}) {
    auto rs = build_root_system(AlgebraSpec::parse(name));
    auto all = enumerate_orderings(rs);
    CHECK(all.size() == 1);
    CHECK(elementary_inversions(all[0], rs).empty());
    CHECK(inversion_connected(rs));
  }
}
