#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "extremal/algebra.hpp"
#include "extremal/coeffield.hpp"
#include "extremal/ordering.hpp"
#include "extremal/wmodule.hpp"

namespace extremal {

/// PBW monomial over a fixed normal ordering gamma_0 < ... < gamma_{p-1}:
/// written form  e_{-g_{p-1}}^{n_{p-1}} ... e_{-g_0}^{n_0} e_{g_0}^{m_0} ... e_{g_{p-1}}^{m_{p-1}}.
/// Exponents are indexed by ordering position.
struct PbwMonomial {
  std::vector<int> lower, raise;

  bool is_identity() const;
  int parity_bit(const RootSystem& rs, const std::vector<int>& ordering) const;
  bool operator==(const PbwMonomial& o) const { return lower == o.lower && raise == o.raise; }
  bool operator<(const PbwMonomial& o) const {
    if (lower != o.lower) return lower < o.lower;
    return raise < o.raise;
  }
};

/// Element of the truncated Taylor extension: canonical PBW terms with the
/// Cartan coefficient written on the left of each monomial.
struct TaylorElement {
  std::map<PbwMonomial, CartanRational> terms;
  std::vector<int> ordering_roots;  // the normal ordering this is canonical in
  int grade = 0;                    // working truncation N

  bool is_zero() const { return terms.empty(); }
  /// Coefficient of the identity monomial.
  CartanRational leading(int nvars) const;
  bool operator==(const TaylorElement& o) const {
    return terms == o.terms && ordering_roots == o.ordering_roots && grade == o.grade;
  }
};

/// Straightening engine bound to an algebra, a normal ordering, a truncation
/// grade and a rho mode.  Elements are immutable values; all operations are
/// pure and deterministic.
class TaylorAlgebra {
 public:
  TaylorAlgebra(std::shared_ptr<const StructureTable> table, NormalOrdering ordering, int grade,
                RhoMode mode = RhoMode::Standard);

  const StructureTable& table() const { return *m_table; }
  const RootSystem& root_system() const { return m_table->root_system(); }
  const NormalOrdering& ordering() const { return m_ordering; }
  int grade() const { return m_grade; }
  RhoMode rho_mode() const { return m_mode; }
  int positions() const { return (int)m_ordering.roots.size(); }
  int nvars() const { return coeff_nvars(root_system(), m_mode); }

  TaylorElement zero() const;
  TaylorElement one() const;
  /// Single canonical monomial with a left coefficient.
  TaylorElement monomial(const PbwMonomial& m, const CartanRational& c) const;
  /// A single generator e_{+-gamma} as an element (gamma in the reduced system).
  TaylorElement generator(GenSym s) const;
  /// e_{-gamma}^n e_{gamma}^n with a left coefficient, for projector factors.
  TaylorElement balanced_power(int root_idx, int n, const CartanRational& c) const;

  TaylorElement add(const TaylorElement& a, const TaylorElement& b) const;
  TaylorElement subtract(const TaylorElement& a, const TaylorElement& b) const;
  TaylorElement scale(const TaylorElement& a, const CartanRational& c) const;
  /// PBW-canonical product, exact modulo the working truncation.
  TaylorElement multiply(const TaylorElement& a, const TaylorElement& b) const;

  /// Re-expression of an element canonical in `src` into this algebra's
  /// ordering.  Same algebra and truncation required.
  TaylorElement canonicalize_from(const TaylorElement& x, const TaylorAlgebra& src) const;

  /// Matrix of the element on a module.  Coefficients are evaluated at the
  /// weights their terms act on; a vanishing denominator raises
  /// SingularWeightError.  Requires the standard rho mode.
  Matrix apply(const TaylorElement& x, const WeightModule& m) const;
  /// Action restricted to selected basis columns (weight-subspace blocks).
  Matrix apply_on_columns(const TaylorElement& x, const WeightModule& m,
                          const std::vector<int>& cols) const;

  /// Root-lattice weight of a monomial (sum of raising minus lowering roots).
  std::vector<int> weight_of(const PbwMonomial& m) const;
  /// max_i of the raising degree sum_pos raise * l_i.
  int raising_grade(const PbwMonomial& m) const;
  /// max_i |sum (lower - raise) l_i| (the Taylor-extension constraint).
  int degree_gap(const PbwMonomial& m) const;
  /// Highest raising grade present in an element.
  int max_grade(const TaylorElement& x) const;

  /// Deterministic rendering for golden files.
  std::string str(const TaylorElement& x) const;

 private:
  struct Item {
    CartanRational coef;
    std::vector<int> word;  // engine keys
  };
  // Engine keys: 0..p-1 lowering (key k = position p-1-k), p..2p-1 raising.
  int key_of(GenSym s) const;
  GenSym sym_of(int key) const;
  const std::vector<Item>& expansion(int kx, int ky) const;
  CartanRational shift_past(const CartanRational& c, const std::vector<int>& weight) const;
  void check_compatible(const TaylorElement& x, const char* who) const;
  void accumulate(std::map<PbwMonomial, CartanRational>& acc, const PbwMonomial& m,
                  const CartanRational& c) const;
  // Straightens coef * (canonical mono) * word into `acc`.
  void straighten_into(std::map<PbwMonomial, CartanRational>& acc, CartanRational coef,
                       PbwMonomial mono, std::vector<int> pending) const;

  std::shared_ptr<const StructureTable> m_table;
  NormalOrdering m_ordering;
  int m_grade;
  RhoMode m_mode;
  std::vector<int> m_pos_of_root;  // positive-root index -> ordering position (-1 if absent)
  mutable std::map<std::pair<int, int>, std::vector<Item>> m_expansions;
};

}  // namespace extremal
