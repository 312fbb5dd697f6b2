#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace forge {

// All arithmetic in this project is exact: coefficients are arbitrary-precision
// rationals, and every comparison in the test suites is equality on the nose.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) { return q.str(); }

// Parses "p", "-p", or "p/q" with an optional leading sign.
Rational parse_rational(const std::string& text);

// Binomial coefficient C(n, j) for integer (possibly negative) n and j >= 0:
// n(n-1)...(n-j+1) / j!.  Used by the mode-algebra product recursions, where
// upper arguments are routinely negative.
Rational binomial(long n, long j);

} // namespace forge
