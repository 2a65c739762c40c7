#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace treeskel {

// Exact arbitrary-precision rational. GMP keeps values canonical
// (reduced, positive denominator, zero as 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" with q > 0 after normalization.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : text) {
    if (c != '-' && c != '/' && (c < '0' || c > '9'))
      throw std::invalid_argument("bad rational literal: " + text);
  }
  Rational r;
  try {
    r = Rational(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

// Safe numerator/denominator constructor. mpq_class(p, q) keeps the raw
// pair, so 4/2 would compare unequal to 2; this always canonicalizes.
inline Rational make_rational(long p, long q = 1) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Renders as "p" or "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_zero_one(const Rational& r) { return r == 0 || r == 1; }

using RationalVec = std::vector<Rational>;

inline Rational dot(const RationalVec& a, const RationalVec& b) {
  Rational s = 0;
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

}  // namespace treeskel
