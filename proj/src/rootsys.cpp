#include "extremal/rootsys.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "extremal/errors.hpp"
#include "extremal/matrix.hpp"

namespace extremal {

std::string color_name(RootColor c) {
  switch (c) {
    case RootColor::White: return "white";
    case RootColor::Grey: return "grey";
    case RootColor::Dark: return "dark";
  }
  return "?";
}

AlgebraSpec AlgebraSpec::parse(const std::string& in) {
  std::string s;
  for (char c : in)
    if (!isspace((unsigned char)c)) s.push_back(c);
  auto make = [](Family f, int rank, std::string name) {
    AlgebraSpec a;
    a.family = f;
    a.rank = rank;
    a.name = std::move(name);
    return a;
  };
  // aliases
  if (s == "sl2" || s == "su2" || s == "A1") return make(Family::A, 1, "A1");
  if (s == "sl3" || s == "su3" || s == "A2") return make(Family::A, 2, "A2");
  if (s == "sl4" || s == "su4" || s == "A3") return make(Family::A, 3, "A3");
  if (s == "sl5" || s == "su5" || s == "A4") return make(Family::A, 4, "A4");
  if (s == "A1xA1" || s == "D2") return make(Family::D, 2, "D2");
  if (s == "G2") return make(Family::G2, 2, "G2");
  if (s.size() == 2 && (s[0] == 'B' || s[0] == 'C' || s[0] == 'D') && isdigit((unsigned char)s[1])) {
    int r = s[1] - '0';
    if (r >= 2 && r <= 4) {
      Family f = s[0] == 'B' ? Family::B : s[0] == 'C' ? Family::C : Family::D;
      return make(f, r, s);
    }
  }
  if (s == "osp12" || s == "osp(1|2)") {
    AlgebraSpec a = make(Family::OSP12, 1, "osp(1|2)");
    a.tau = {0};
    return a;
  }
  auto glmake = [&make](int m, int n) {
    AlgebraSpec a = make(Family::GL, m + n - 1,
                         "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")");
    a.gl_m = m;
    a.gl_n = n;
    a.tau = {m - 1};  // distinguished system: single odd simple root
    return a;
  };
  if (s == "gl11" || s == "gl(1|1)") return glmake(1, 1);
  if (s == "gl21" || s == "gl(2|1)") return glmake(2, 1);
  if (s == "gl12" || s == "gl(1|2)") return glmake(1, 2);
  throw UnsupportedAlgebraError(in);
}

namespace {

struct AmbientSystem {
  std::vector<Rat> metric;                       // diagonal ambient metric
  std::vector<std::vector<Rat>> simple;          // simple roots, ambient coords
  std::vector<std::vector<Rat>> positive;        // all positive roots, ambient coords
};

std::vector<Rat> unit(int dim, int i, const Rat& c = 1) {
  std::vector<Rat> v(dim, Rat(0));
  v[i] = c;
  return v;
}

std::vector<Rat> vsub(std::vector<Rat> a, const std::vector<Rat>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
std::vector<Rat> vadd(std::vector<Rat> a, const std::vector<Rat>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

AmbientSystem ambient_for(const AlgebraSpec& spec) {
  AmbientSystem s;
  int r = spec.rank;
  switch (spec.family) {
    case Family::A: {
      int d = r + 1;
      s.metric.assign(d, Rat(1));
      for (int i = 0; i < r; ++i) s.simple.push_back(vsub(unit(d, i), unit(d, i + 1)));
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) s.positive.push_back(vsub(unit(d, i), unit(d, j)));
      break;
    }
    case Family::B: {
      s.metric.assign(r, Rat(2));
      for (int i = 0; i + 1 < r; ++i) s.simple.push_back(vsub(unit(r, i), unit(r, i + 1)));
      s.simple.push_back(unit(r, r - 1));
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          s.positive.push_back(vsub(unit(r, i), unit(r, j)));
          s.positive.push_back(vadd(unit(r, i), unit(r, j)));
        }
      for (int i = 0; i < r; ++i) s.positive.push_back(unit(r, i));
      break;
    }
    case Family::C: {
      s.metric.assign(r, Rat(1));
      for (int i = 0; i + 1 < r; ++i) s.simple.push_back(vsub(unit(r, i), unit(r, i + 1)));
      s.simple.push_back(unit(r, r - 1, 2));
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          s.positive.push_back(vsub(unit(r, i), unit(r, j)));
          s.positive.push_back(vadd(unit(r, i), unit(r, j)));
        }
      for (int i = 0; i < r; ++i) s.positive.push_back(unit(r, i, 2));
      break;
    }
    case Family::D: {
      s.metric.assign(r, Rat(1));
      for (int i = 0; i + 1 < r; ++i) s.simple.push_back(vsub(unit(r, i), unit(r, i + 1)));
      s.simple.push_back(vadd(unit(r, r - 2), unit(r, r - 1)));
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          s.positive.push_back(vsub(unit(r, i), unit(r, j)));
          s.positive.push_back(vadd(unit(r, i), unit(r, j)));
        }
      break;
    }
    case Family::GL: {
      int m = spec.gl_m, n = spec.gl_n, d = m + n;
      s.metric.assign(d, Rat(1));
      for (int i = m; i < d; ++i) s.metric[i] = -1;
      for (int i = 0; i + 1 < d; ++i) s.simple.push_back(vsub(unit(d, i), unit(d, i + 1)));
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) s.positive.push_back(vsub(unit(d, i), unit(d, j)));
      break;
    }
    default:
      throw InternalError("ambient_for: family handled elsewhere");
  }
  return s;
}

Rat ambient_pairing(const std::vector<Rat>& metric, const std::vector<Rat>& a,
                    const std::vector<Rat>& b) {
  Rat acc = 0;
  for (size_t i = 0; i < metric.size(); ++i) acc += metric[i] * a[i] * b[i];
  return acc;
}

}  // namespace

int RootSystem::find(const std::vector<int>& coords) const {
  for (int i = 0; i < (int)positive.size(); ++i)
    if (positive[i].coords == coords) return i;
  return -1;
}

Rat RootSystem::pairing_coords(const std::vector<int>& a, const std::vector<int>& b) const {
  Rat acc = 0;
  for (int i = 0; i < rank(); ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < rank(); ++j)
      if (b[j]) acc += bilinear[i][j] * a[i] * b[j];
  }
  return acc;
}

std::vector<Rat> RootSystem::mu_of(int idx) const {
  const auto& l = positive.at(idx).coords;
  std::vector<Rat> mu(rank(), Rat(0));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (l[j]) mu[i] += bilinear[i][j] * l[j];
  return mu;
}

Rat RootSystem::rho(int idx) const {
  const auto& l = positive.at(idx).coords;
  Rat acc = 0;
  for (int i = 0; i < rank(); ++i)
    if (l[i]) acc += Rat(l[i]) * bilinear[i][i] / 2;
  return acc;
}

std::vector<Root> RootSystem::reduced_positive_roots() const {
  std::vector<Root> out;
  out.reserve(reduced_index.size());
  for (int idx : reduced_index) out.push_back(positive[idx]);
  return out;
}

bool RootSystem::is_reduced(int idx) const {
  return std::find(reduced_index.begin(), reduced_index.end(), idx) != reduced_index.end();
}

std::string RootSystem::coords_name(const std::vector<int>& coords) {
  static const char* letters = "abcd";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i]) continue;
    if (!first) os << "+";
    first = false;
    if (coords[i] != 1) os << coords[i];
    os << letters[i];
  }
  if (first) os << "0";
  return os.str();
}

std::string RootSystem::root_name(int idx) const { return coords_name(positive.at(idx).coords); }

RootSystem build_root_system(const AlgebraSpec& spec) {
  const int r = spec.rank;
  if (r < 1 || r > 4) throw UnsupportedAlgebraError(spec.name + " (rank out of range)");
  if (spec.family == Family::A && r > 4) throw UnsupportedAlgebraError(spec.name);
  if ((spec.family == Family::B || spec.family == Family::C || spec.family == Family::D) &&
      (r < 2 || r > 4))
    throw UnsupportedAlgebraError(spec.name);
  if (spec.family == Family::GL && spec.gl_m + spec.gl_n > 3)
    throw UnsupportedAlgebraError(spec.name + " (m+n > 3)");

  RootSystem rs;
  rs.spec = spec;

  // Collect simple-root coordinates of each positive root plus the bilinear
  // form on simple roots.
  std::vector<std::vector<int>> coords;
  if (spec.family == Family::G2) {
    rs.bilinear = {{Rat(6), Rat(-3)}, {Rat(-3), Rat(2)}};
    coords = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
  } else if (spec.family == Family::OSP12) {
    rs.bilinear = {{Rat(1)}};
    coords = {{1}, {2}};
  } else {
    AmbientSystem amb = ambient_for(spec);
    int d = (int)amb.metric.size();
    rs.bilinear.assign(r, std::vector<Rat>(r, Rat(0)));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        rs.bilinear[i][j] = ambient_pairing(amb.metric, amb.simple[i], amb.simple[j]);
    // Express each positive root over the simple roots.
    Matrix a(d, r);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < r; ++j) a.at(i, j) = amb.simple[j][i];
    for (const auto& root : amb.positive) {
      auto sol = a.solve(root);
      if (!sol) throw InternalError("positive root outside simple-root span");
      std::vector<int> l(r);
      for (int j = 0; j < r; ++j) {
        if (!is_integer((*sol)[j]) || sgn((*sol)[j]) < 0)
          throw InternalError("non-integral root coordinates");
        l[j] = (int)(*sol)[j].get_num().get_si();
      }
      coords.push_back(std::move(l));
    }
  }

  // Deterministic order: by height, then lexicographic coordinates.
  std::sort(coords.begin(), coords.end(), [](const auto& x, const auto& y) {
    int hx = 0, hy = 0;
    for (int v : x) hx += v;
    for (int v : y) hy += v;
    if (hx != hy) return hx < hy;
    return x < y;
  });

  for (auto& l : coords) {
    Root root;
    root.coords = l;
    int par = 0;
    for (int t : spec.tau) par += l[t];
    root.parity = par & 1;
    Rat nn = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (l[i] && l[j]) nn += rs.bilinear[i][j] * l[i] * l[j];
    root.norm = nn;
    rs.positive.push_back(std::move(root));
  }

  // Color classification.
  auto find_coords = [&rs](const std::vector<int>& c) {
    for (int i = 0; i < (int)rs.positive.size(); ++i)
      if (rs.positive[i].coords == c) return i;
    return -1;
  };
  for (auto& root : rs.positive) {
    std::vector<int> dbl(root.coords);
    for (auto& v : dbl) v *= 2;
    bool has_double = find_coords(dbl) >= 0;
    if (root.parity == 0) {
      root.color = RootColor::White;
      if (is_zero(root.norm)) throw InternalError("even root with zero norm");
    } else if (has_double) {
      root.color = RootColor::Dark;
      if (is_zero(root.norm)) throw InternalError("dark root with zero norm");
    } else {
      root.color = RootColor::Grey;
      if (!is_zero(root.norm)) throw InternalError("grey root with nonzero norm");
    }
  }

  // Simple-root positions.
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    int idx = find_coords(e);
    if (idx < 0) throw InternalError("simple root missing from positive system");
    rs.simple_index.push_back(idx);
  }

  // Reduced system: drop 2*gamma for dark gamma.
  for (int i = 0; i < (int)rs.positive.size(); ++i) {
    bool doubled = false;
    const auto& c = rs.positive[i].coords;
    bool even_coords = std::all_of(c.begin(), c.end(), [](int v) { return v % 2 == 0; });
    if (even_coords) {
      std::vector<int> half(c);
      for (auto& v : half) v /= 2;
      int j = find_coords(half);
      if (j >= 0 && rs.positive[j].color == RootColor::Dark) doubled = true;
    }
    if (!doubled) rs.reduced_index.push_back(i);
  }
  return rs;
}

Rat rho_value(const RootSystem& rs, const Root& gamma) {
  int idx = rs.find(gamma.coords);
  if (idx < 0) throw UnknownRootError(RootSystem::coords_name(gamma.coords));
  return rs.rho(idx);
}

}  // namespace extremal
