#ifndef LISTRAD_RATIONAL_HPP
#define LISTRAD_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace listrad {

// All binary-side quantities in this library are exact rationals; the GMP
// backend keeps them canonical (lowest terms, positive denominator).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Canonical form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Decimal approximation for human-facing output.
double to_double(const Rational& r);

Integer binomial(unsigned n, unsigned k);

Rational pow(const Rational& base, unsigned exp);

// Smallest integer >= r.
Integer ceil(const Rational& r);

}  // namespace listrad

#endif  // LISTRAD_RATIONAL_HPP
