#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fmb {

// Arbitrary precision rational, always kept in canonical (reduced) form.
// Never bind arithmetic results to `auto`: gmpxx returns expression templates.
using Rational = mpq_class;

// Accepts "3", "-7/2", "0.125", "-1.5e0" is NOT accepted (no exponents).
Rational parse_rational(std::string_view text);

// Builds numerator/denominator from integer strings; denominator must be nonzero.
Rational make_rational(std::string_view numerator, std::string_view denominator);

// Canonical n/d (mpq_class(n, d) alone does not reduce).
Rational ratio(long numerator, long denominator);

// "n" for integers, "n/d" otherwise.
std::string format_rational(const Rational& value);

int sign(const Rational& value);

double to_double(const Rational& value);

}  // namespace fmb
