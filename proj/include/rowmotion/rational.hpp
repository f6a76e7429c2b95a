#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rowmotion {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "p/q" text, denominator always written (e.g. "1/1").
std::string to_string(const Rational& q);

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input or
/// a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace rowmotion
