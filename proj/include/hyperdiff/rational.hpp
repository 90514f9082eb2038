#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace hyperdiff {

/// Exact arbitrary-precision rational. Every coefficient, coordinate and
/// matrix entry in the library is one of these. Expression templates are
/// off so `auto` never captures a dangling expression.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Accepts "p", "p/q" and finite decimals such as "-1.25". Throws
/// Error{ErrorKind::Parse} on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical lowest-terms form: "0", "-3", "1/3".
std::string format_rational(const Rational& value);

/// Rounds half away from zero to `digits` fractional digits, e.g. "0.333".
std::string format_decimal(const Rational& value, int digits);

}  // namespace hyperdiff
