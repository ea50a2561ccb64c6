#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "extremal/errors.hpp"

namespace extremal {

/// Exact rational scalar used everywhere in the core.  No floating point.
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Renders "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Parses "p" or "p/q".  Throws on malformed input.
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw Error("empty rational literal");
  mpq_class r;
  if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat acc = 1;
  Rat b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline Rat rat_factorial(unsigned n) {
  Rat acc = 1;
  for (unsigned k = 2; k <= n; ++k) acc *= (long)k;
  return acc;
}

/// lcm of denominators of a list of rationals.
inline mpz_class common_denominator(const std::vector<Rat>& xs) {
  mpz_class d = 1;
  for (const auto& x : xs) {
    mpz_class g;
    mpz_lcm(g.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
    d = g;
  }
  return d;
}

}  // namespace extremal
