#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "extremal/matrix.hpp"
#include "extremal/rootsys.hpp"

namespace extremal {

/// A root-vector basis symbol e_{+gamma} or e_{-gamma}.
struct GenSym {
  int root = 0;          // positive-root index
  bool lowering = false;  // e_{-gamma} when true

  bool operator==(const GenSym& o) const { return root == o.root && lowering == o.lowering; }
  bool operator<(const GenSym& o) const {
    if (lowering != o.lowering) return lowering < o.lowering;
    return root < o.root;
  }
};

/// Value of a super bracket: a linear combination of root vectors plus an
/// element of the Cartan subalgebra expressed over h_1..h_r.
struct BracketValue {
  std::vector<std::pair<GenSym, Rat>> vectors;  // sorted by symbol
  std::vector<Rat> cartan;                      // coefficients of h_i

  bool is_zero() const;
  BracketValue& add(GenSym s, const Rat& c);
  BracketValue& add_cartan(int i, const Rat& c);
  BracketValue& scale(const Rat& c);
};

/// Exact structure constants of the Cartan-Weyl basis together with the
/// defining matrix realization they were computed from.  Root vectors are
/// normalized so that [e_gamma, e_{-gamma}] = h_gamma, where h_gamma acts on
/// a weight-lambda vector by (gamma, lambda).  Immutable once built.
class StructureTable {
 public:
  const RootSystem& root_system() const { return *m_rs; }

  /// Super bracket of two root-vector symbols.
  const BracketValue& bracket(GenSym x, GenSym y) const;
  /// [h_i, e_gamma] = (alpha_i, +-gamma) e_gamma.
  Rat cartan_action(int i, GenSym s) const;

  /// Parity of a root vector.
  int theta(GenSym s) const { return m_rs->root(s.root).parity; }

  // Defining representation.
  int dim() const { return m_dim; }
  const std::vector<int>& parities() const { return m_parities; }
  const std::vector<std::vector<Rat>>& weights() const { return m_weights; }
  const Matrix& matrix_of(GenSym s) const;
  const Matrix& cartan_matrix(int i) const { return m_hmat.at(i); }

  /// Name-based bracket for the public surface; accepts "e(a+b)", "f(a+b)",
  /// "h(a)".  Throws UnknownSymbolError.
  BracketValue bracket_by_name(const std::string& x, const std::string& y) const;

  /// List of all basis symbol names in deterministic order.
  std::vector<std::string> symbol_names() const;

  /// e_gamma -> c e_gamma, e_{-gamma} -> c^{-1} e_{-gamma}; the bracket table
  /// is rebuilt from the rescaled matrices.  Used to check that downstream
  /// products e_{-gamma}^n e_gamma^n are rescaling invariant.
  StructureTable rescaled(int root_idx, const Rat& c) const;

  static StructureTable build(std::shared_ptr<const RootSystem> rs);

 private:
  StructureTable() = default;
  void derive_table();

  std::shared_ptr<const RootSystem> m_rs;
  int m_dim = 0;
  std::vector<int> m_parities;
  std::vector<std::vector<Rat>> m_weights;  // pairing coords per basis vector
  std::vector<Matrix> m_emat, m_fmat;       // per positive root
  std::vector<Matrix> m_hmat;               // per simple root
  std::map<std::pair<GenSym, GenSym>, BracketValue> m_table;
};

/// Builds (and caches) the structure table for an algebra.  The cache keeps
/// tables alive for the whole process; tables are immutable and shareable.
std::shared_ptr<const StructureTable> realize(const AlgebraSpec& spec);

/// Matrix of the super bracket [x, y] = xy - (-1)^{theta theta'} yx.
Matrix super_bracket(const Matrix& x, int theta_x, const Matrix& y, int theta_y);

}  // namespace extremal
