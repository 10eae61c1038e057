/*
  Exact rational scalars.

  All arithmetic in this project is exact: coefficients are arbitrary
  precision rationals (boost::multiprecision::cpp_rational), which are
  always stored in lowest terms with a positive denominator. No floating
  point appears anywhere downstream.
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace critmg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using QVec = std::vector<Rational>;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Canonical string form: "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

// Accepts "p" or "p/q" with optional leading '-'.
inline Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw std::invalid_argument("bad rational literal: " + s);
  }
  try {
    Rational r(s);
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

inline long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::invalid_argument("rational is not an integer");
  return static_cast<long>(numerator(r));
}

}  // namespace critmg
