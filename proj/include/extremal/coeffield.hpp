#pragma once

#include <string>
#include <utility>
#include <vector>

#include "extremal/polynomial.hpp"
#include "extremal/rootsys.hpp"

namespace extremal {

/// A linear form a0 + sum a_i x_i, kept in a canonical integer scaling
/// (content 1, first nonzero variable coefficient positive) so that equal
/// forms compare equal.
class LinearForm {
 public:
  LinearForm() = default;
  /// Normalizes; returns the scalar k with (input) = k * (stored form).
  static std::pair<LinearForm, Rat> normalized(const std::vector<Rat>& coeffs, const Rat& c0);

  const std::vector<Rat>& coeffs() const { return m_coeffs; }
  const Rat& constant() const { return m_c0; }
  int nvars() const { return (int)m_coeffs.size(); }

  Polynomial to_poly() const;
  Rat evaluate(const std::vector<Rat>& x) const;
  LinearForm shifted(const std::vector<Rat>& mu) const;  // x_i -> x_i + mu_i

  bool operator==(const LinearForm& o) const {
    return m_coeffs == o.m_coeffs && m_c0 == o.m_c0;
  }
  bool operator<(const LinearForm& o) const {
    if (m_coeffs != o.m_coeffs) return m_coeffs < o.m_coeffs;
    return m_c0 < o.m_c0;
  }

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::vector<Rat> m_coeffs;
  Rat m_c0;
};

/// Exact rational function of the Cartan variables whose denominator is a
/// product of linear forms.  Always kept reduced: no denominator factor
/// divides the numerator, factors sorted, zero has an empty denominator.
class CartanRational {
 public:
  CartanRational() = default;
  explicit CartanRational(int nvars) : m_num(nvars) {}

  static CartanRational zero(int nvars) { return CartanRational(nvars); }
  static CartanRational one(int nvars) { return from_rat(nvars, 1); }
  static CartanRational from_rat(int nvars, const Rat& c);
  static CartanRational from_poly(Polynomial p);
  /// 1 / form^mult.
  static CartanRational inverse_form(const LinearForm& form, int mult = 1);

  int nvars() const { return m_num.nvars(); }
  bool is_zero() const { return m_num.is_zero(); }
  bool is_one() const { return m_den.empty() && m_num.is_constant() && m_num.constant_term() == 1; }
  const Polynomial& num() const { return m_num; }
  const std::vector<std::pair<LinearForm, int>>& den() const { return m_den; }

  CartanRational operator-() const;
  CartanRational operator+(const CartanRational& o) const;
  CartanRational operator-(const CartanRational& o) const;
  CartanRational operator*(const CartanRational& o) const;
  CartanRational operator*(const Rat& c) const;
  bool operator==(const CartanRational& o) const {
    return m_num == o.m_num && m_den == o.m_den;
  }
  bool operator!=(const CartanRational& o) const { return !(*this == o); }

  /// Substitutes x_i -> x_i + mu_i.
  CartanRational shifted(const std::vector<Rat>& mu) const;

  /// Substitutes x_v -> a * x_v + b (a nonzero).
  CartanRational with_scaled_var(int v, const Rat& a, const Rat& b) const;

  /// Exact value at a point; throws SingularWeightError naming the vanishing
  /// factor when a denominator form is zero there.
  Rat evaluate(const std::vector<Rat>& x) const;

  /// Multiplicative inverse; requires the numerator to be a nonzero constant
  /// or a constant multiple of a single linear form.
  CartanRational inverse() const;

  /// Canonical text rendering, e.g. "1/((h_a+2)*(h_a+3))".
  std::string str(const std::vector<std::string>& names) const;

 private:
  void reduce();
  Polynomial m_num;
  std::vector<std::pair<LinearForm, int>> m_den;
};

inline CartanRational operator*(const Rat& c, const CartanRational& f) { return f * c; }

/// Whether projector denominators use the numeric rho or, for rank-2 systems,
/// symbolic values x_a, x_b appended as extra variables.
enum class RhoMode { Standard, Symbolic };

/// Number of coefficient variables for a root system in the given mode.
int coeff_nvars(const RootSystem& rs, RhoMode mode);

/// Variable display names: h_a, h_b, ... plus x_a, x_b in symbolic mode.
std::vector<std::string> coeff_names(const RootSystem& rs, RhoMode mode);

/// The linear form h_gamma + rho(gamma) + extra for a positive root, as a
/// (canonical form, scale) pair with h_gamma + rho + extra = scale * form.
std::pair<LinearForm, Rat> root_form(const RootSystem& rs, int root_idx, const Rat& extra,
                                     RhoMode mode);

/// 1 / (h_gamma + rho(gamma) + extra).
CartanRational inverse_root_form(const RootSystem& rs, int root_idx, const Rat& extra,
                                 RhoMode mode);

/// phi_{gamma,n} per the white-root factor: the inverse product
/// prod_{k=1..n} (h_gamma + rho(gamma) + (gamma,gamma)/2 * k)^{-1}.
/// Throws ColorMismatchError unless gamma is white; phi_{gamma,0} = 1.
CartanRational phi_factor(const RootSystem& rs, const Root& gamma, int n,
                          RhoMode mode = RhoMode::Standard);

}  // namespace extremal
