#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace quotcoh {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// Rationals are kept normalized by the backend (lowest terms, denominator > 0,
// zero is 0/1), which is exactly the invariant the rest of the library assumes.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "p" or "p/q" text for a rational, q omitted when 1.
inline std::string rational_text(const Rational& r)
{
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

} // namespace quotcoh
