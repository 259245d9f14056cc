#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace eulerian {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

// "p/q" in lowest terms, or "p" when q == 1.
inline std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text);

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

}  // namespace eulerian
