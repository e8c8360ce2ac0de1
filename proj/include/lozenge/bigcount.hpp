#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lozenge {

/// Exact nonnegative count (tilings, matchings). Never floating point.
using BigInt = boost::multiprecision::cpp_int;
/// Exact rational used for edge weights, weighted counts and formula factors.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1) {
    return boost::multiprecision::numerator(v).str();
  }
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

inline bool is_integral(const Rational& v) {
  return boost::multiprecision::denominator(v) == 1;
}

/// Throws if `v` is not an integer.
inline BigInt require_integral(const Rational& v, const char* what) {
  if (!is_integral(v)) {
    throw std::logic_error(std::string(what) + " evaluated to non-integral " + to_string(v));
  }
  return boost::multiprecision::numerator(v);
}

/// Parses "p" or "p/q".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  BigInt den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(BigInt(text.substr(0, slash)), den);
}

}  // namespace lozenge
