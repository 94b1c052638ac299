#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qhecke {

// Arbitrary-precision rational. mpq_class keeps values in lowest terms with a
// positive denominator as long as every constructor path canonicalizes.
using Rational = mpq_class;

/// Canonical "num/den" text, e.g. "1/2", "-3/1", "0/1".
std::string to_string(const Rational& value);

/// Parses "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// value^exponent for any integer exponent; value must be nonzero when
/// exponent < 0.
Rational pow(const Rational& value, std::int64_t exponent);

inline bool is_unit_sign(const Rational& value) { return value == 1 || value == -1; }

}  // namespace qhecke
