#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ccm/integer.hpp"

namespace ccm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational to_rational(Int v) { return Rational(v.value()); }

/// "p/q" in lowest terms with positive denominator; integers print as "p/1".
inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

/// Accepts "p", "p/q" or "-p/q". Throws Error(kParse) on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace ccm
