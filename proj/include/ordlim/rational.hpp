#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ordlim {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q", an integer "p", or a finite decimal such as "0.25" into an
/// exact rational. Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den" in lowest terms, including integers ("1/1", "0/1").
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace ordlim
