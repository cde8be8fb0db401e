#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pexider {

using Rational = mpq_class;

/// Parses `p`, `p/q`, or a decimal such as `-1.25` / `3e-2`. Conversion is exact.
Rational parse_rational(std::string_view text);

/// Canonical text: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& q);

Rational midpoint(const Rational& a, const Rational& b);

}  // namespace pexider
