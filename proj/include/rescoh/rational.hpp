#pragma once

#include <gmpxx.h>

#include <string>

namespace rescoh {

/// Exact rational number. GMP keeps it canonical (lowest terms, q > 0).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q" in lowest terms, or "p" when q == 1. Locale independent.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace rescoh
