#pragma once

#include <map>
#include <string>
#include <vector>

#include "extremal/rational.hpp"

namespace extremal {

/// Exponent vector of a monomial.  Negative entries are permitted (Laurent
/// monomials); the classical coefficient field only ever uses nonnegative
/// exponents.
using Expo = std::vector<int>;

/// Sparse multivariate (Laurent) polynomial over Rat with a fixed number of
/// variables.  Terms are kept in a map so iteration order, equality and
/// rendering are canonical.
class Polynomial {
 public:
  Polynomial() : m_nvars(0) {}
  explicit Polynomial(int nvars) : m_nvars(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rat& c);
  /// The monomial c * x_i.
  static Polynomial variable(int nvars, int i, const Rat& c = 1);
  static Polynomial monomial(const Expo& e, const Rat& c);

  int nvars() const { return m_nvars; }
  bool is_zero() const { return m_terms.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rat constant_term() const;

  const std::map<Expo, Rat>& terms() const { return m_terms; }

  /// Adds c * x^e, erasing the term if the coefficient cancels.
  void add_term(const Expo& e, const Rat& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rat& c) const;
  bool operator==(const Polynomial& o) const {
    return m_nvars == o.m_nvars && m_terms == o.m_terms;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Total degree, or -1 for the zero polynomial.
  int total_degree() const;
  /// Degree in variable v (max exponent; assumes nonnegative exponents).
  int degree_in(int v) const;

  /// Substitutes x_i -> x_i + mu[i] for every variable.  Exact.
  Polynomial shifted(const std::vector<Rat>& mu) const;

  /// Substitutes x_v -> a * x_v + b.
  Polynomial scaled_var(int v, const Rat& a, const Rat& b) const;

  /// Evaluates at a rational point.  Exponents must be nonnegative.
  Rat evaluate(const std::vector<Rat>& x) const;

  /// Exact division by a degree-one divisor; returns false if not divisible.
  /// On success *quot holds the quotient.
  bool divide_by_linear(const Polynomial& lin, Polynomial* quot) const;

  /// Canonical rendering, e.g. "h_a^2*h_b - 3/2*h_a + 1".
  std::string str(const std::vector<std::string>& names) const;

 private:
  int m_nvars;
  std::map<Expo, Rat> m_terms;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

}  // namespace extremal
