#include "extremal/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace extremal {

Polynomial Polynomial::constant(int nvars, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(Expo(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i, const Rat& c) {
  Polynomial p(nvars);
  Expo e(nvars, 0);
  e.at(i) = 1;
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::monomial(const Expo& e, const Rat& c) {
  Polynomial p((int)e.size());
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (m_terms.empty()) return true;
  return m_terms.size() == 1 && m_terms.begin()->first == Expo(m_nvars, 0);
}

Rat Polynomial::constant_term() const {
  auto it = m_terms.find(Expo(m_nvars, 0));
  return it == m_terms.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Expo& e, const Rat& c) {
  if (extremal::is_zero(c)) return;
  auto [it, fresh] = m_terms.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (extremal::is_zero(it->second)) m_terms.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(m_nvars);
  for (const auto& [e, c] : m_terms) r.m_terms.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.m_terms) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.m_terms) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(m_nvars);
  Expo e(m_nvars);
  for (const auto& [ea, ca] : m_terms)
    for (const auto& [eb, cb] : o.m_terms) {
      for (int i = 0; i < m_nvars; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  if (extremal::is_zero(c)) return Polynomial(m_nvars);
  Polynomial r(m_nvars);
  for (const auto& [e, k] : m_terms) r.m_terms.emplace(e, k * c);
  return r;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : m_terms) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int Polynomial::degree_in(int v) const {
  int d = 0;
  for (const auto& [e, c] : m_terms) d = std::max(d, e[v]);
  return d;
}

Polynomial Polynomial::shifted(const std::vector<Rat>& mu) const {
  // (x_i + mu_i)^e expanded per variable via binomials.
  Polynomial r(m_nvars);
  for (const auto& [e, c] : m_terms) {
    Polynomial term = Polynomial::constant(m_nvars, c);
    for (int v = 0; v < m_nvars; ++v) {
      if (e[v] == 0) continue;
      if (extremal::is_zero(mu[v])) {
        Expo single(m_nvars, 0);
        single[v] = e[v];
        term = term * Polynomial::monomial(single, 1);
        continue;
      }
      Polynomial binexp(m_nvars);
      Rat binom = 1;  // C(e,k) built incrementally
      Rat mupow = 1;
      for (int k = e[v]; k >= 0; --k) {
        Expo single(m_nvars, 0);
        single[v] = k;
        binexp.add_term(single, binom * mupow);
        binom *= (long)k;
        binom /= (long)(e[v] - k + 1);
        mupow *= mu[v];
      }
      term = term * binexp;
    }
    r = r + term;
  }
  return r;
}

Polynomial Polynomial::scaled_var(int v, const Rat& a, const Rat& b) const {
  Polynomial r(m_nvars);
  for (const auto& [e, c] : m_terms) {
    if (e[v] == 0) {
      r.add_term(e, c);
      continue;
    }
    // (a x + b)^n expanded by binomials.
    Rat binom = 1, bpow = 1;
    for (int k = e[v]; k >= 0; --k) {
      Expo e2 = e;
      e2[v] = k;
      r.add_term(e2, c * binom * rat_pow(a, (unsigned long)k) * bpow);
      binom *= (long)k;
      binom /= (long)(e[v] - k + 1);
      bpow *= b;
    }
  }
  return r;
}

Rat Polynomial::evaluate(const std::vector<Rat>& x) const {
  Rat acc = 0;
  for (const auto& [e, c] : m_terms) {
    Rat t = c;
    for (int v = 0; v < m_nvars; ++v) {
      if (e[v] < 0) throw InternalError("negative exponent in rational evaluation");
      if (e[v]) t *= rat_pow(x[v], (unsigned long)e[v]);
    }
    acc += t;
  }
  return acc;
}

bool Polynomial::divide_by_linear(const Polynomial& lin, Polynomial* quot) const {
  if (lin.total_degree() != 1) throw InternalError("divisor is not linear");
  // Pivot variable: first one appearing in the divisor.
  int v = -1;
  Rat cv = 0;
  for (const auto& [e, c] : lin.m_terms)
    for (int i = 0; i < m_nvars; ++i)
      if (e[i] == 1 && (v < 0 || i < v)) {
        v = i;
        cv = c;
      }
  if (v < 0) throw InternalError("divisor has no variable");
  Polynomial rest = lin;  // lin - cv*x_v
  {
    Expo e(m_nvars, 0);
    e[v] = 1;
    rest.add_term(e, -cv);
  }
  Polynomial rem = *this;
  Polynomial q(m_nvars);
  while (true) {
    int d = rem.degree_in(v);
    if (d <= 0) break;
    // Collect the top slice A_d * x_v^d.
    Polynomial slice(m_nvars);
    for (const auto& [e, c] : rem.m_terms)
      if (e[v] == d) {
        Expo e2 = e;
        e2[v] = d - 1;
        slice.add_term(e2, c / cv);
      }
    q = q + slice;
    // rem -= slice * lin
    rem = rem - slice * lin;
  }
  if (!rem.is_zero()) return false;
  if (quot) *quot = q;
  return true;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (m_terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Iterate in descending monomial order for readability.
  for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? "-" : "+");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    bool has_var = false;
    for (int x : e)
      if (x) has_var = true;
    if (!has_var) {
      os << rat_str(a);
      continue;
    }
    bool coef_shown = false;
    if (a != 1) {
      os << rat_str(a);
      coef_shown = true;
    }
    bool firstv = true;
    for (int v = 0; v < m_nvars; ++v) {
      if (!e[v]) continue;
      if (!firstv || coef_shown) os << "*";
      firstv = false;
      os << names.at(v);
      if (e[v] != 1) os << "^" << e[v];
    }
  }
  return os.str();
}

}  // namespace extremal
