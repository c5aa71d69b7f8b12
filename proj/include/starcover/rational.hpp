#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace starcover {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses an integer, a `p/q` fraction or a finite decimal such as `-0.125`.
/// Decimals are converted exactly by place value. Throws Error(Parse).
Rational parse_rational(std::string_view text);

/// `p` for integers, `p/q` otherwise (always in lowest terms).
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace starcover
