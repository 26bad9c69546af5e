#pragma once

#include <gmpxx.h>

#include <string>

namespace demazure {

/// Exact arbitrary-precision rational; all non-integral arithmetic in the library uses it.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace demazure
