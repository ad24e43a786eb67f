#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gmn {

// Exponents are arbitrary-precision: witness moduli are products of many
// per-rotation factors and must never wrap.
using Int = boost::multiprecision::cpp_int;

// Floor division/remainder (cpp_int's built-in % truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_mod(const Int& a, const Int& b) {
  Int r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) r += b;
  return r;
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int lcm_int(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

inline std::string to_string(const Int& a) { return a.str(); }

}  // namespace gmn
