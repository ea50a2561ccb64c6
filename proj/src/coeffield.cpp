#include "extremal/coeffield.hpp"

#include <algorithm>
#include <sstream>

#include "extremal/errors.hpp"

namespace extremal {

std::pair<LinearForm, Rat> LinearForm::normalized(const std::vector<Rat>& coeffs, const Rat& c0) {
  bool any = false;
  for (const auto& c : coeffs) any = any || !is_zero(c);
  if (!any) throw InternalError("linear form without variables");
  // Scale so all entries are integers with content 1 and the first nonzero
  // variable coefficient is positive.
  std::vector<Rat> all = coeffs;
  all.push_back(c0);
  mpz_class den = common_denominator(all);
  mpz_class g = 0;
  for (const auto& c : all) {
    mpz_class num = c.get_num() * (den / c.get_den());
    mpz_class t;
    mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    g = t;
  }
  Rat scale(den, g);  // multiply input by scale to normalize magnitude
  scale.canonicalize();
  for (const auto& c : coeffs)
    if (!is_zero(c)) {
      if (sgn(c * scale) < 0) scale = -scale;
      break;
    }
  LinearForm f;
  f.m_coeffs.reserve(coeffs.size());
  for (const auto& c : coeffs) f.m_coeffs.push_back(c * scale);
  f.m_c0 = c0 * scale;
  return {f, 1 / scale};
}

Polynomial LinearForm::to_poly() const {
  Polynomial p(nvars());
  p.add_term(Expo(nvars(), 0), m_c0);
  for (int i = 0; i < nvars(); ++i)
    if (!is_zero(m_coeffs[i])) {
      Expo e(nvars(), 0);
      e[i] = 1;
      p.add_term(e, m_coeffs[i]);
    }
  return p;
}

Rat LinearForm::evaluate(const std::vector<Rat>& x) const {
  Rat acc = m_c0;
  for (int i = 0; i < nvars(); ++i)
    if (!is_zero(m_coeffs[i])) acc += m_coeffs[i] * x[i];
  return acc;
}

LinearForm LinearForm::shifted(const std::vector<Rat>& mu) const {
  Rat c0 = m_c0;
  for (int i = 0; i < nvars(); ++i) c0 += m_coeffs[i] * mu[i];
  // Coefficients are already canonical; only the constant changes, which
  // cannot disturb the scaling convention.
  LinearForm f = *this;
  f.m_c0 = c0;
  return f;
}

std::string LinearForm::str(const std::vector<std::string>& names) const {
  return to_poly().str(names);
}

CartanRational CartanRational::from_rat(int nvars, const Rat& c) {
  CartanRational r(nvars);
  r.m_num = Polynomial::constant(nvars, c);
  return r;
}

CartanRational CartanRational::from_poly(Polynomial p) {
  CartanRational r(p.nvars());
  r.m_num = std::move(p);
  return r;
}

CartanRational CartanRational::inverse_form(const LinearForm& form, int mult) {
  CartanRational r(form.nvars());
  r.m_num = Polynomial::constant(form.nvars(), 1);
  if (mult > 0) r.m_den.push_back({form, mult});
  return r;
}

CartanRational CartanRational::operator-() const {
  CartanRational r = *this;
  r.m_num = -r.m_num;
  return r;
}

CartanRational CartanRational::operator*(const Rat& c) const {
  if (extremal::is_zero(c)) return CartanRational::zero(nvars());
  CartanRational r = *this;
  r.m_num = r.m_num * c;
  return r;
}

CartanRational CartanRational::operator*(const CartanRational& o) const {
  if (is_zero() || o.is_zero()) return CartanRational::zero(nvars());
  CartanRational r;
  r.m_num = m_num * o.m_num;
  // Merge denominator multisets.
  r.m_den = m_den;
  for (const auto& [f, m] : o.m_den) {
    auto it = std::find_if(r.m_den.begin(), r.m_den.end(),
                           [&f](const auto& p) { return p.first == f; });
    if (it != r.m_den.end())
      it->second += m;
    else
      r.m_den.push_back({f, m});
  }
  std::sort(r.m_den.begin(), r.m_den.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  r.reduce();
  return r;
}

CartanRational CartanRational::operator+(const CartanRational& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // Common denominator: per-form max of multiplicities.
  std::vector<std::pair<LinearForm, int>> common = m_den;
  for (const auto& [f, m] : o.m_den) {
    auto it = std::find_if(common.begin(), common.end(),
                           [&f](const auto& p) { return p.first == f; });
    if (it != common.end())
      it->second = std::max(it->second, m);
    else
      common.push_back({f, m});
  }
  std::sort(common.begin(), common.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  auto complement = [&common](const std::vector<std::pair<LinearForm, int>>& den,
                              int nv) {
    Polynomial p = Polynomial::constant(nv, 1);
    for (const auto& [f, m] : common) {
      int have = 0;
      auto it = std::find_if(den.begin(), den.end(),
                             [&f](const auto& q) { return q.first == f; });
      if (it != den.end()) have = it->second;
      Polynomial fp = f.to_poly();
      for (int k = have; k < m; ++k) p = p * fp;
    }
    return p;
  };
  CartanRational r;
  r.m_num = m_num * complement(m_den, nvars()) + o.m_num * complement(o.m_den, nvars());
  r.m_den = std::move(common);
  if (r.m_num.is_zero()) return CartanRational::zero(nvars());
  r.reduce();
  return r;
}

CartanRational CartanRational::operator-(const CartanRational& o) const { return *this + (-o); }

void CartanRational::reduce() {
  if (m_num.is_zero()) {
    m_den.clear();
    return;
  }
  for (auto& [f, m] : m_den) {
    Polynomial fp = f.to_poly();
    while (m > 0) {
      Polynomial q;
      if (!m_num.divide_by_linear(fp, &q)) break;
      m_num = std::move(q);
      --m;
    }
  }
  m_den.erase(std::remove_if(m_den.begin(), m_den.end(),
                             [](const auto& p) { return p.second == 0; }),
              m_den.end());
}

CartanRational CartanRational::shifted(const std::vector<Rat>& mu) const {
  CartanRational r;
  r.m_num = m_num.shifted(mu);
  r.m_den.reserve(m_den.size());
  for (const auto& [f, m] : m_den) r.m_den.push_back({f.shifted(mu), m});
  std::sort(r.m_den.begin(), r.m_den.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // A shift cannot create new cancellations if none existed, but merged
  // factors can coincide after shifting only if they did before; no reduce
  // needed.  Keep it anyway for safety on hand-built inputs.
  r.reduce();
  return r;
}

CartanRational CartanRational::with_scaled_var(int v, const Rat& a, const Rat& b) const {
  if (extremal::is_zero(a)) throw InternalError("with_scaled_var: zero scale");
  CartanRational r;
  r.m_num = m_num.scaled_var(v, a, b);
  for (const auto& [f, mlt] : m_den) {
    std::vector<Rat> coeffs = f.coeffs();
    Rat c0 = f.constant() + coeffs[v] * b;
    coeffs[v] *= a;
    auto [form, scale] = LinearForm::normalized(coeffs, c0);
    r.m_num = r.m_num * rat_pow(1 / scale, (unsigned long)mlt);
    auto it = std::find_if(r.m_den.begin(), r.m_den.end(),
                           [&form](const auto& p) { return p.first == form; });
    if (it != r.m_den.end())
      it->second += mlt;
    else
      r.m_den.push_back({form, mlt});
  }
  std::sort(r.m_den.begin(), r.m_den.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  r.reduce();
  return r;
}

Rat CartanRational::evaluate(const std::vector<Rat>& x) const {
  Rat dv = 1;
  for (const auto& [f, m] : m_den) {
    Rat fv = f.evaluate(x);
    if (extremal::is_zero(fv)) {
      std::ostringstream os;
      os << "denominator factor (";
      for (int i = 0; i < f.nvars(); ++i)
        if (!extremal::is_zero(f.coeffs()[i])) os << "+" << rat_str(f.coeffs()[i]) << "*x" << i;
      os << "+" << rat_str(f.constant()) << ") vanishes at (";
      for (size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << rat_str(x[i]);
      os << ")";
      throw SingularWeightError(os.str());
    }
    dv *= rat_pow(fv, (unsigned long)m);
  }
  return m_num.evaluate(x) / dv;
}

CartanRational CartanRational::inverse() const {
  if (is_zero()) throw InternalError("inverse of zero");
  Polynomial denp = Polynomial::constant(nvars(), 1);
  for (const auto& [f, m] : m_den)
    for (int k = 0; k < m; ++k) denp = denp * f.to_poly();
  CartanRational r;
  if (m_num.is_constant()) {
    r.m_num = denp * (1 / m_num.constant_term());
    return r;
  }
  if (m_num.total_degree() != 1)
    throw InternalError("inverse requires a constant or linear numerator");
  // Write num = k * form with form canonical.
  std::vector<Rat> coeffs(nvars(), Rat(0));
  Rat c0 = 0;
  for (const auto& [e, c] : m_num.terms()) {
    int deg = 0, var = -1;
    for (int i = 0; i < nvars(); ++i) {
      deg += e[i];
      if (e[i] == 1) var = i;
    }
    if (deg == 0)
      c0 = c;
    else
      coeffs[var] = c;
  }
  auto [form, k] = LinearForm::normalized(coeffs, c0);
  r.m_num = denp * (1 / k);
  r.m_den.push_back({form, 1});
  r.reduce();
  return r;
}

std::string CartanRational::str(const std::vector<std::string>& names) const {
  std::string num = m_num.str(names);
  if (m_den.empty()) return num;
  bool wrap_num = m_num.terms().size() > 1;
  std::ostringstream os;
  if (wrap_num) os << "(" << num << ")";
  else os << num;
  os << "/(";
  bool first = true;
  for (const auto& [f, m] : m_den) {
    if (!first) os << "*";
    first = false;
    os << "(" << f.str(names) << ")";
    if (m > 1) os << "^" << m;
  }
  os << ")";
  return os.str();
}

int coeff_nvars(const RootSystem& rs, RhoMode mode) {
  return rs.rank() + (mode == RhoMode::Symbolic ? rs.rank() : 0);
}

std::vector<std::string> coeff_names(const RootSystem& rs, RhoMode mode) {
  static const char* letters = "abcd";
  std::vector<std::string> names;
  for (int i = 0; i < rs.rank(); ++i) names.push_back(std::string("h_") + letters[i]);
  if (mode == RhoMode::Symbolic)
    for (int i = 0; i < rs.rank(); ++i) names.push_back(std::string("x_") + letters[i]);
  return names;
}

std::pair<LinearForm, Rat> root_form(const RootSystem& rs, int root_idx, const Rat& extra,
                                     RhoMode mode) {
  const Root& g = rs.root(root_idx);
  int nv = coeff_nvars(rs, mode);
  std::vector<Rat> coeffs(nv, Rat(0));
  Rat c0 = extra;
  for (int i = 0; i < rs.rank(); ++i) coeffs[i] = g.coords[i];
  if (mode == RhoMode::Symbolic) {
    // rho extended linearly over symbolic simple values x_i.
    for (int i = 0; i < rs.rank(); ++i) coeffs[rs.rank() + i] = g.coords[i];
  } else {
    c0 += rs.rho(root_idx);
  }
  return LinearForm::normalized(coeffs, c0);
}

CartanRational inverse_root_form(const RootSystem& rs, int root_idx, const Rat& extra,
                                 RhoMode mode) {
  auto [form, scale] = root_form(rs, root_idx, extra, mode);
  return CartanRational::inverse_form(form) * (1 / scale);
}

CartanRational phi_factor(const RootSystem& rs, const Root& gamma, int n, RhoMode mode) {
  int idx = rs.find(gamma.coords);
  if (idx < 0) throw UnknownRootError(RootSystem::coords_name(gamma.coords));
  if (rs.root(idx).color != RootColor::White)
    throw ColorMismatchError("phi_factor requires a white root, got " +
                             color_name(rs.root(idx).color) + " " + rs.root_name(idx));
  CartanRational acc = CartanRational::one(coeff_nvars(rs, mode));
  Rat half_norm = rs.root(idx).norm / 2;
  for (int k = 1; k <= n; ++k) acc = acc * inverse_root_form(rs, idx, half_norm * k, mode);
  return acc;
}

}  // namespace extremal
