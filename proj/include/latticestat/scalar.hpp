#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "latticestat/errors.hpp"

namespace latticestat {

/// Exact arbitrary-precision rational. Every order comparison in the toolkit
/// is exact; no value ever passes through floating point.
using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Scalar abs_scalar(const Scalar& x) { return x < 0 ? Scalar(-x) : x; }

inline const Integer& numer(const Scalar& x) {
  return boost::multiprecision::numerator(x);
}
inline const Integer& denom(const Scalar& x) {
  return boost::multiprecision::denominator(x);
}

/// Canonical serialization "p/q", denominator always present: "-3/1", "1/2".
inline std::string scalar_to_string(const Scalar& x) {
  return numer(x).str() + "/" + denom(x).str();
}

/// Accepts "p/q", "p", optional leading sign on the numerator.
inline Scalar parse_scalar(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Scalar(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational '" + text + "'");
    return Scalar(num, den);
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed rational literal '" + text + "'");
  }
}

}  // namespace latticestat
