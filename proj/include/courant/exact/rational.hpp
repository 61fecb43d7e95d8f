#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace courant {

// Arbitrary-precision rationals. mpq_class keeps gcd(num, den) = 1, den > 0
// after every arithmetic operation; construct through make_rational or
// parse_rational so that literal inputs are canonical as well.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

/// Accepts "n", "-n", "n/d" with arbitrary-size integers; rejects floats.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace courant
