#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace schemekit {

/// Exact rational scalar. GMP keeps every result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Canonical text form "p/q" (q >= 1, always present, so 2 renders "2/1").
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" or "-p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

}  // namespace schemekit
