#pragma once

#include <string>
#include <vector>

#include "extremal/rational.hpp"

namespace extremal {

/// Algebra families supported by the engine.  Ordinary simple families up to
/// rank 4 plus G2, the gl(m|n) superalgebras with m+n <= 3, and osp(1|2).
enum class Family { A, B, C, D, G2, GL, OSP12 };

enum class RootColor { White, Grey, Dark };

std::string color_name(RootColor c);

struct AlgebraSpec {
  Family family = Family::A;
  int rank = 1;
  int gl_m = 0, gl_n = 0;   // only for Family::GL
  std::vector<int> tau;     // 0-based odd simple-root indices
  std::string name;         // canonical display name

  bool is_super() const { return !tau.empty(); }

  /// Parses "A2", "B3", "G2", "D2", "A1xA1", "sl2", "gl(2|1)", "gl21",
  /// "osp(1|2)", "osp12", ...  Throws UnsupportedAlgebraError.
  static AlgebraSpec parse(const std::string& s);
};

struct Root {
  std::vector<int> coords;  // decomposition over simple roots, all >= 0
  RootColor color = RootColor::White;
  int parity = 0;           // 0 even, 1 odd
  Rat norm;                 // (gamma, gamma)
  int height() const {
    int h = 0;
    for (int c : coords) h += c;
    return h;
  }
};

/// A positive root system with colors, norms, parities, the reduced system
/// and the rho function.  Immutable after construction.
class RootSystem {
 public:
  AlgebraSpec spec;
  std::vector<std::vector<Rat>> bilinear;  // (alpha_i, alpha_j)
  std::vector<Root> positive;              // sorted by (height, coords)
  std::vector<int> simple_index;           // position of alpha_i in `positive`
  std::vector<int> reduced_index;          // positions forming the reduced system

  int rank() const { return spec.rank; }
  int num_positive() const { return (int)positive.size(); }
  int num_reduced() const { return (int)reduced_index.size(); }

  /// Index of the root with the given coordinates, or -1.
  int find(const std::vector<int>& coords) const;

  const Root& root(int idx) const { return positive.at(idx); }

  /// Bilinear pairing of two coordinate vectors.
  Rat pairing_coords(const std::vector<int>& a, const std::vector<int>& b) const;
  /// Pairing of two positive roots by index.
  Rat pairing(int i, int j) const {
    return pairing_coords(positive.at(i).coords, positive.at(j).coords);
  }

  /// (alpha_i, gamma) for every simple root; the commutation shift of gamma.
  std::vector<Rat> mu_of(int idx) const;

  /// rho(gamma) by positive-root index; linear with rho(alpha_i)=(alpha_i,alpha_i)/2.
  Rat rho(int idx) const;

  std::vector<Root> reduced_positive_roots() const;

  bool is_reduced(int idx) const;

  /// Name like "a", "b", "a+2b" from the coordinate vector.
  std::string root_name(int idx) const;
  static std::string coords_name(const std::vector<int>& coords);
};

/// Constructs the root system for a supported algebra.
/// Throws UnsupportedAlgebraError outside the supported families/ranks.
RootSystem build_root_system(const AlgebraSpec& spec);

/// rho of an arbitrary root value; throws UnknownRootError if gamma is not in
/// the positive system.
Rat rho_value(const RootSystem& rs, const Root& gamma);

}  // namespace extremal
