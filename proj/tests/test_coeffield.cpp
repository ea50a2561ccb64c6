#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "extremal/coeffield.hpp"
#include "extremal/errors.hpp"

using namespace extremal;

namespace {

LinearForm lf(const std::vector<Rat>& coeffs, const Rat& c0) {
  return LinearForm::normalized(coeffs, c0).first;
}

// h + c in one variable.
CartanRational inv_h_plus(long c) { return CartanRational::inverse_form(lf({Rat(1)}, Rat(c))); }

CartanRational h_poly() { return CartanRational::from_poly(Polynomial::variable(1, 0)); }

// Random small rational function with denominators from a fixed pool.
CartanRational random_cr(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> deg(0, 2);
  std::uniform_int_distribution<int> denct(0, 2);
  Polynomial num(1);
  for (int t = 0; t < 3; ++t) num.add_term({deg(rng)}, Rat(coef(rng)));
  if (num.is_zero()) num = Polynomial::constant(1, 1);
  CartanRational r = CartanRational::from_poly(num);
  for (int t = denct(rng); t > 0; --t) r = r * inv_h_plus(1 + deg(rng));
  return r;
}

}  // namespace

TEST_CASE("rational field basics") {
  auto a = inv_h_plus(1);
  CHECK(a + a == CartanRational::from_rat(1, 2) * a);

  // (h+2)/(h+2) cancels to 1.
  auto num = CartanRational::from_poly(Polynomial::variable(1, 0) + Polynomial::constant(1, 2));
  CHECK((num * inv_h_plus(2)).is_one());

  auto prod = inv_h_plus(1) * inv_h_plus(2);
  CHECK(prod.den().size() == 2);
  CHECK(prod.str({"h"}) == "1/((h+1)*(h+2))");
}

TEST_CASE("shift substitutes variables") {
  CHECK(h_poly().shifted({Rat(2)}) ==
        CartanRational::from_poly(Polynomial::variable(1, 0) + Polynomial::constant(1, 2)));
  auto f = inv_h_plus(1) * CartanRational::from_poly(Polynomial::variable(1, 0));
  CHECK(f.shifted({Rat(0)}) == f);
  CHECK(inv_h_plus(1).shifted({Rat(-2)}) == inv_h_plus(-1));
}

TEST_CASE("shift round trip") {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto f = random_cr(rng);
    CHECK(f.shifted({Rat(3, 2)}).shifted({Rat(-3, 2)}) == f);
  }
}

TEST_CASE("phi factors") {
  auto su2 = build_root_system(AlgebraSpec::parse("A1"));
  const Root& alpha = su2.root(su2.simple_index[0]);
  CHECK(phi_factor(su2, alpha, 0).is_one());
  auto phi2 = phi_factor(su2, alpha, 2);
  CHECK(phi2.str(coeff_names(su2, RhoMode::Standard)) == "1/((h_a+2)*(h_a+3))");

  auto a2 = build_root_system(AlgebraSpec::parse("A2"));
  int ab = a2.find({1, 1});
  REQUIRE(ab >= 0);
  auto phi1 = phi_factor(a2, a2.root(ab), 1);
  CHECK(phi1.str(coeff_names(a2, RhoMode::Standard)) == "1/((h_a+h_b+3))");

  auto gl11 = build_root_system(AlgebraSpec::parse("gl(1|1)"));
  CHECK_THROWS_AS(phi_factor(gl11, gl11.root(0), 1), ColorMismatchError);
}

TEST_CASE("evaluation") {
  CHECK(inv_h_plus(2).evaluate({Rat(2)}) == Rat(1, 4));
  CHECK_THROWS_AS(inv_h_plus(2).evaluate({Rat(-2)}), SingularWeightError);

  // phi_{alpha,1} of su(2) at h = 2j with j=1.
  auto su2 = build_root_system(AlgebraSpec::parse("A1"));
  auto phi1 = phi_factor(su2, su2.root(su2.simple_index[0]), 1);
  CHECK(phi1.evaluate({Rat(2)}) == Rat(1, 4));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(11);
  for (int i = 0; i < 12; ++i) {
    auto a = random_cr(rng), b = random_cr(rng), c = random_cr(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == CartanRational::zero(1));
  }
}

TEST_CASE("evaluate is a homomorphism") {
  std::mt19937 rng(13);
  std::vector<Rat> pt = {Rat(5, 2)};
  for (int i = 0; i < 12; ++i) {
    auto a = random_cr(rng), b = random_cr(rng);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST_CASE("inverse of linear numerators") {
  auto f = CartanRational::from_poly(Polynomial::variable(1, 0) * Rat(2) +
                                     Polynomial::constant(1, 4)) *
           inv_h_plus(1);
  auto g = f.inverse();
  CHECK((f * g).is_one());
  CHECK_THROWS_AS(CartanRational::zero(1).inverse(), InternalError);
}
