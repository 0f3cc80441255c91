#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace algext {

// Exact scalars. mpq values are kept canonical (reduced, positive denominator)
// by GMP; every arithmetic result preserves that invariant.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Parses "p", "-p", or "p/q". Throws Error(ParseError) on malformed input or
// zero denominator; the result is canonicalized explicitly since mpq string
// assignment does not reduce.
Rational parse_rational(const std::string& s);

// "p" when the denominator is 1, else "p/q".
std::string rational_string(const Rational& q);

std::string int_string(const Int& n);

}  // namespace algext
