#pragma once

#include <memory>
#include <string>
#include <vector>

#include "extremal/algebra.hpp"

namespace extremal {

/// Finite-dimensional weight module with exact generator action matrices.
/// The basis is graded by weight (stored in pairing coordinates (alpha_i, wt))
/// and, for superalgebras, by parity.  `gram` holds the diagonal of the
/// contravariant form in this basis; it matters only for modules built out of
/// su(2) spin chains, where Clebsch-Gordan normalization needs it.
struct WeightModule {
  std::shared_ptr<const StructureTable> table;
  std::string name;
  int dim = 0;
  std::vector<int> parities;
  std::vector<std::vector<Rat>> weights;
  std::vector<Rat> gram;
  std::vector<Matrix> eact, fact;  // per positive root
  std::vector<Matrix> hact;        // per simple root

  const RootSystem& root_system() const { return table->root_system(); }
  const Matrix& act(GenSym s) const { return s.lowering ? fact.at(s.root) : eact.at(s.root); }

  /// Basis indices of a given weight.
  std::vector<int> basis_of_weight(const std::vector<Rat>& w) const;
  /// Distinct weights in deterministic order.
  std::vector<std::vector<Rat>> weight_support() const;
  /// Smallest N such that every raising power e_gamma^n with n > N acts as 0;
  /// truncation at this grade makes projector action exact on the module.
  int depth() const;
};

/// Defining representation straight from the realization.
WeightModule defining_module(std::shared_ptr<const StructureTable> table);

/// Adjoint representation; action matrices are the structure constants.
WeightModule adjoint_module(std::shared_ptr<const StructureTable> table);

/// su(2) spin-j module in the divided-power basis b_k = f^k v / k!, which has
/// integer matrices:  e b_k = (2j-k+1) b_{k-1},  f b_k = (k+1) b_{k+1}.
/// Requires the A1 algebra; 2j must be a nonnegative integer.
WeightModule spin_module(std::shared_ptr<const StructureTable> table, const Rat& j);

/// Graded tensor product: x(v (x) w) = xv (x) w + (-1)^{theta(x) theta(v)} v (x) xw.
WeightModule tensor_module(const WeightModule& a, const WeightModule& b);

/// Parses "defining", "adjoint", "spin(j)" and '*'-separated tensor products,
/// e.g. "spin(1/2)*spin(1/2)".  Throws TooLargeError above dimension 200.
WeightModule build_module(std::shared_ptr<const StructureTable> table, const std::string& kind);

/// Joint kernel of all simple raising operators, as a column-basis matrix.
Matrix joint_raising_kernel(const WeightModule& m);

/// Spins present in an su(2) module, from weight multiplicities.
std::vector<Rat> su2_spectrum(const WeightModule& m);

/// Casimir matrix J^2 = J_- J_+ + J_0 (J_0 + 1) with J_0 = h/2.
Matrix su2_casimir(const WeightModule& m);

/// Finite interpolation product over the Casimir spectrum: the projector onto
/// the spin-j isotypic component.  Throws SpinAbsentError when j is not in the
/// module's spectrum.
Matrix casimir_projector_su2(const WeightModule& m, const Rat& j);

}  // namespace extremal
