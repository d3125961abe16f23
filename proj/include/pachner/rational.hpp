#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pachner {

/// Arbitrary-precision exact rational.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r)
{
    return r.str();
}

/// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(const std::string& text);

} // namespace pachner
