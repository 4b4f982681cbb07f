#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace zmx {

/// Arbitrary-precision integer.
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// Exact fraction in canonical form (positive denominator, reduced).
///
/// Expression templates are disabled so the type composes cleanly with Eigen
/// expressions; every arithmetic result is a fully evaluated value.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Parses a literal of the form `[+-]?digits(/digits)?`. Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical literal: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

int sign(const Rational& q);

/// Quotient that raises DivisionByZero instead of the backend's error.
Rational divide(const Rational& num, const Rational& den);

/// q^e for any integer exponent; negative exponents require q != 0.
Rational power(const Rational& q, int e);

double to_double(const Rational& q);

}  // namespace zmx
