#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace signcert {

/// Exact rational scalar used for every polynomial coefficient.
using Rational = mpq_class;

/// Parses "3", "-2/5", "1.25" or "-1e-3" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& r);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational from_double(double v);

inline double to_double(const Rational& r) { return r.get_d(); }

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace signcert
