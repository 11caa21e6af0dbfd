#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace loosecyc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "3", "-2", "0.125", "1/3" or "1e-3" into an exact rational.
/// Decimal input is taken at face value, so "0.1" is exactly 1/10.
Rational parse_rational(std::string_view text);

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);

std::string to_string(const Rational& r);
double to_double(const Rational& r);

}  // namespace loosecyc
