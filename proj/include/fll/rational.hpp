#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace fll {

// Exact arithmetic backbone. Every expectation formula in the library is
// evaluated as a reduced fraction; floating point only appears in the
// Monte-Carlo engine and in Azuma bound evaluation.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// m^e as an exact rational; e may be negative.
Rational rational_pow(std::uint64_t base, std::int64_t exponent);

// m^e as an integer; e >= 0.
Int int_pow(std::uint64_t base, std::uint64_t exponent);

// "p/q" (denominator omitted when 1, matching the reduced form).
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// Decimal rendering, at most max_fraction_digits after the point, trailing
// zeros stripped. Exact when the expansion terminates within the budget.
std::string decimal_string(const Rational& value, int max_fraction_digits = 12);

} // namespace fll
