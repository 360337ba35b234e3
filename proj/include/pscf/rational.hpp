#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace pscf {

using Bigint = boost::multiprecision::cpp_int;

/// Exact rational number: arbitrary-precision, always in lowest terms with a
/// positive denominator. No floating point anywhere in the core.
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(long long num, long long den = 1);

/// Parses "3/5", "-3/5" or "7". Throws std::invalid_argument on malformed
/// input or a non-positive denominator.
Rational parse_rational(std::string_view text);

/// "num/den" with the denominator always written out ("3/5", "1/1").
std::string fraction_str(const Rational& r);

/// "num/den", or just "num" when the denominator is 1.
std::string rational_str(const Rational& r);

}  // namespace pscf
