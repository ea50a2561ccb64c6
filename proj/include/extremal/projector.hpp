#pragma once

#include <string>
#include <vector>

#include "extremal/taylor.hpp"

namespace extremal {

/// Result of checking the defining equations of an extremal projector.
/// `residuals` lists the equations that failed together with the smallest
/// raising grade at which a nonzero term survived; empty means all passed.
struct ProjectorReport {
  std::string algebra;
  std::vector<int> ordering;
  int checked_grade = 0;
  int built_grade = 0;
  int right_checked_grade = 0;  // grade to which P e_{-a} was verifiable
  bool leading_ok = false;
  std::vector<std::pair<std::string, int>> residuals;
  double seconds = 0.0;

  bool passed() const { return leading_ok && residuals.empty(); }
};

/// Per-root factor of the extremal projector, truncated at the algebra's
/// grade.  White roots give the inverse-linear series, grey roots the exact
/// two-term factor, dark roots the double series with even and odd strands.
TaylorElement projector_factor(const TaylorAlgebra& alg, int root_idx);

/// Ordered product of the factors along the algebra's normal ordering.
TaylorElement build_projector(const TaylorAlgebra& alg);

/// Checks e_{a_i} p = 0, p e_{-a_i} = 0, p p = p (all modulo grade >
/// check_grade) and that the identity coefficient is 1.  The right-sided
/// products lose their top grade to truncation, so they are checked to
/// min(check_grade, p.grade - 1); build one grade above the check to cover
/// them fully.
ProjectorReport verify_projector(const TaylorAlgebra& alg, const TaylorElement& p,
                                 int check_grade);

/// Coefficients C_0..C_N of the closed su(2) projector as exact rational
/// functions of the symbolic spin j (variable 0).
std::vector<CartanRational> su2_closed_form(int N);

/// Independent oracle: solves the termwise linear recursion that J_+ P = 0
/// imposes on the ansatz sum C_n J_-^n J_+^n, using the straightening engine
/// only to produce the recursion coefficients.  Returns C_0..C_N in j.
std::vector<CartanRational> shapiro_ansatz_solve(int N);

/// Exact projection of a module: the matrix of p and a basis of its image.
struct ProjectionResult {
  Matrix matrix;
  Matrix image;  // columns span p(M)
};
ProjectionResult project(const TaylorAlgebra& alg, const TaylorElement& p,
                         const WeightModule& m);

/// Clebsch-Gordan table for spin(j1) x spin(j2) -> spin(j).  Values are kept
/// as (sign, squared magnitude) so the whole pipeline stays rational;
/// Condon-Shortley phases.
struct CgEntry {
  Rat m, m1, m2;
  int sign = 0;
  Rat value_sq;
};
std::vector<CgEntry> cg_su2(const Rat& j1, const Rat& j2, const Rat& j);

}  // namespace extremal
