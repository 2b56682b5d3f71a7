#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symrep {

/// Arbitrary-precision integer used for every count and multiplicity.
/// Values produced by the library are nonnegative unless stated otherwise.
using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Natural factorial(unsigned n);
Natural binomial(unsigned n, unsigned k);
Natural power(const Natural& base, unsigned exponent);

inline std::string to_decimal(const Natural& n) { return n.str(); }

/// Parses a nonnegative decimal string; throws ParseError on anything else.
Natural parse_natural(const std::string& text);

}  // namespace symrep
