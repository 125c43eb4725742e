#pragma once

#include <Eigen/Core>

#include "tviro/bigfloat.hpp"

namespace Eigen {

template <>
struct NumTraits<tviro::BigReal> : GenericNumTraits<tviro::BigReal> {
  typedef tviro::BigReal Real;
  typedef tviro::BigReal NonInteger;
  typedef tviro::BigReal Nested;
  typedef tviro::BigReal Literal;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 30,
    MulCost = 40
  };

  static inline Real epsilon() { return tviro::BigReal::from_double(1e-60, 256); }
  static inline Real dummy_precision() { return tviro::BigReal::from_double(1e-50, 256); }
  static inline int digits10() { return 60; }
};

}  // namespace Eigen

namespace tviro {
using BigRealMatrix4 = Eigen::Matrix<BigReal, 4, 4>;
}  // namespace tviro
