#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace weave {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws UsageError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a", "-a" or "a/b" (decimal integers only).
Rational parse_rational(std::string_view text);

/// Exact "num/den" form, denominator always present ("1/1", "-3/2").
std::string format_exact(const Rational& q);

/// Compact form for polynomial printing ("3", "-3/2").
std::string to_string(const Rational& q);

std::string to_string(const Integer& z);

}  // namespace weave
