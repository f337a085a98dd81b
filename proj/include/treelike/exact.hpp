#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace treelike {

// All closed-form evaluation is exact: unbounded integers and rationals.
// Geodesic-distance sums grow geometrically in the step count, so 64-bit
// overflows within ~15 steps for the fastest-growing families.
using ExactInt = boost::multiprecision::cpp_int;
using ExactRatio = boost::multiprecision::cpp_rational;

inline ExactInt pow_int(const ExactInt& base, unsigned exp) {
  ExactInt r = 1, b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

inline ExactRatio pow_ratio(const ExactRatio& base, unsigned exp) {
  ExactRatio r = 1, b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

inline bool is_integral(const ExactRatio& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline ExactInt numerator(const ExactRatio& r) {
  return boost::multiprecision::numerator(r);
}

inline ExactInt denominator(const ExactRatio& r) {
  return boost::multiprecision::denominator(r);
}

// Canonical text form: integers as plain decimal, non-integers as "p/q".
inline std::string to_string(const ExactInt& v) { return v.str(); }

inline std::string to_string(const ExactRatio& r) {
  if (is_integral(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const ExactRatio& r) {
  return static_cast<double>(r);
}

inline ExactInt require_integer(const ExactRatio& r, const char* what) {
  if (!is_integral(r)) {
    throw std::logic_error(std::string(what) + ": expected integer, got " +
                           to_string(r));
  }
  return numerator(r);
}

}  // namespace treelike
