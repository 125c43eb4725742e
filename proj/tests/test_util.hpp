#pragma once

#include <string>

#include "tviro/bigfloat.hpp"

namespace tvtest {

inline tviro::BigReal dec(const std::string& s, unsigned bits = 256) {
  return tviro::BigReal::from_string(s, bits);
}

inline tviro::BigReal pow10(const std::string& exp10, unsigned bits = 256) {
  return tviro::BigReal::from_string("1e" + exp10, bits);
}

inline bool close_abs(const tviro::BigReal& a, const tviro::BigReal& b, const std::string& tol) {
  return tviro::abs(a - b) <= pow10(tol, static_cast<unsigned>(a.precision()));
}

inline bool close_abs(const tviro::BigComplex& a, const tviro::BigComplex& b,
                      const std::string& tol) {
  return close_abs(a.real(), b.real(), tol) && close_abs(a.imag(), b.imag(), tol);
}

inline bool close_rel(const tviro::BigReal& a, const tviro::BigReal& b, const std::string& tol) {
  tviro::BigReal scale = tviro::abs(b);
  if (scale.is_zero()) return close_abs(a, b, tol);
  return tviro::abs(a - b) / scale <= pow10(tol, static_cast<unsigned>(a.precision()));
}

}  // namespace tvtest
