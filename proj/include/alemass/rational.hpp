#pragma once

// Exact rational scalar type and parsing/formatting helpers.
//
// All intersection-form computations in this library are done in exact
// rational arithmetic; floating point enters only at the final pairing
// with curve areas.  Backed by boost::multiprecision (arbitrary
// precision), so unimodular basis changes and matrix inversion never
// overflow.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace alemass {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Accepts "p", "-p", "p/q" with optional whitespace around each token.
inline Rational parse_rational(const std::string& text) {
  const auto trim = [&text](std::string s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos)
      throw std::invalid_argument("malformed rational literal: '" + text + "'");
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
  };
  const std::string s = trim(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(trim(s.substr(0, slash)));
    Integer den(trim(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
    if (den < 0) {  // boost's component constructor wants a positive denominator
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  }
}

// Canonical "p/q" (or "p" when the denominator is 1).
inline std::string format_rational(const Rational& r) {
  const Integer num = rational_num(r);
  const Integer den = rational_den(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace alemass
