#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ringprob {

// Exact fractions and unbounded integers. cpp_rational keeps values reduced
// with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::uint64_t num, std::uint64_t den) {
  return Rational(BigInt(num), BigInt(den));
}

inline std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline std::string to_string(const BigInt& n) { return n.str(); }

// Fixed-point decimal rendering, display only.
std::string to_decimal(const Rational& q, unsigned places);

// Parses "a/b" or "a". Throws Error(invalid_argument) on bad input.
Rational parse_rational(const std::string& text);

inline BigInt floor_of(const Rational& q) {
  // Division of cpp_int truncates toward zero; all callers pass q >= 0.
  return boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
}

// base^exp, saturating at `ceiling` + 1: the result is exact when it is at
// most `ceiling`, and otherwise some value strictly above `ceiling`. Lets
// enormous bounds be compared against small counts without materializing them.
Rational saturating_pow(const Rational& base, std::uint64_t exp, const Rational& ceiling);

}  // namespace ringprob
