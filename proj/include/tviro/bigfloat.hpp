#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace tviro {

class BigReal;
class BigComplex;

/// Carries the working mantissa width (binary digits) for all scalars
/// created through it. Copyable, shareable between threads.
class PrecisionContext {
 public:
  explicit PrecisionContext(unsigned mantissa_bits = 256) : bits_(mantissa_bits) {
    if (bits_ < 64) throw std::invalid_argument("PrecisionContext: mantissa_bits must be >= 64");
  }

  unsigned mantissa_bits() const { return bits_; }

  /// Same context widened by `extra` guard bits (internal use by dilog etc.).
  PrecisionContext widened(unsigned extra) const { return PrecisionContext(bits_ + extra); }

  BigReal real(double v) const;
  BigReal real(long v) const;
  BigReal real(const std::string& decimal) const;
  BigReal zero() const;
  BigReal pi() const;
  BigComplex complex(double re, double im) const;

 private:
  unsigned bits_;
};

/// Arbitrary-precision real scalar (MPFR backed, round-to-nearest).
/// Immutable value semantics; the precision travels with the value and
/// binary operations widen to the larger operand precision.
class BigReal {
 public:
  BigReal() { mpfr_init2(x_, 64); mpfr_set_zero(x_, 1); }
  explicit BigReal(mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }

  BigReal(const BigReal& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
  BigReal(BigReal&& o) noexcept { mpfr_init2(x_, 64); mpfr_swap(x_, o.x_); }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
  }
  ~BigReal() { mpfr_clear(x_); }

  static BigReal from_double(double v, mpfr_prec_t prec);
  static BigReal from_long(long v, mpfr_prec_t prec);
  static BigReal from_string(const std::string& decimal, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(x_); }
  /// Copy rounded to a new precision.
  BigReal rounded_to(mpfr_prec_t prec) const;

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  /// Round-trip-safe decimal rendering with the given significant digits.
  std::string str(int significant_digits = 20) const;

  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  bool is_nan() const { return mpfr_nan_p(x_) != 0; }
  int sign() const { return mpfr_sgn(x_); }
  /// Binary exponent of |x| (0 for x == 0); magnitude ~ 2^exponent.
  long exponent() const { return is_zero() ? 0 : mpfr_get_exp(x_); }

  BigReal operator-() const;
  BigReal operator+(const BigReal& o) const;
  BigReal operator-(const BigReal& o) const;
  BigReal operator*(const BigReal& o) const;
  BigReal operator/(const BigReal& o) const;
  BigReal& operator+=(const BigReal& o) { *this = *this + o; return *this; }
  BigReal& operator-=(const BigReal& o) { *this = *this - o; return *this; }
  BigReal& operator*=(const BigReal& o) { *this = *this * o; return *this; }
  BigReal& operator/=(const BigReal& o) { *this = *this / o; return *this; }

  BigReal operator*(long v) const;
  BigReal operator/(long v) const;
  BigReal& operator*=(long v) { *this = *this * v; return *this; }
  BigReal& operator/=(long v) { *this = *this / v; return *this; }

  bool operator==(const BigReal& o) const { return mpfr_cmp(x_, o.x_) == 0; }
  bool operator!=(const BigReal& o) const { return !(*this == o); }
  bool operator<(const BigReal& o) const { return mpfr_cmp(x_, o.x_) < 0; }
  bool operator<=(const BigReal& o) const { return mpfr_cmp(x_, o.x_) <= 0; }
  bool operator>(const BigReal& o) const { return mpfr_cmp(x_, o.x_) > 0; }
  bool operator>=(const BigReal& o) const { return mpfr_cmp(x_, o.x_) >= 0; }

  mpfr_srcptr raw() const { return x_; }
  mpfr_ptr raw() { return x_; }

 private:
  mpfr_t x_;
};

BigReal abs(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal acos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
/// Real square root; throws std::domain_error for negative input
/// (use principal_sqrt for the signed convention).
BigReal sqrt(const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);

/// Complex scalar as a (re, im) pair of BigReal.
class BigComplex {
 public:
  BigComplex() = default;
  BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit BigComplex(BigReal re) : re_(std::move(re)), im_(BigReal(re_.precision())) {}

  const BigReal& real() const { return re_; }
  const BigReal& imag() const { return im_; }

  BigComplex operator-() const { return BigComplex(-re_, -im_); }
  BigComplex operator+(const BigComplex& o) const { return BigComplex(re_ + o.re_, im_ + o.im_); }
  BigComplex operator-(const BigComplex& o) const { return BigComplex(re_ - o.re_, im_ - o.im_); }
  BigComplex operator*(const BigComplex& o) const {
    return BigComplex(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  BigComplex operator/(const BigComplex& o) const {
    BigReal d = o.re_ * o.re_ + o.im_ * o.im_;
    return BigComplex((re_ * o.re_ + im_ * o.im_) / d, (im_ * o.re_ - re_ * o.im_) / d);
  }
  BigComplex& operator+=(const BigComplex& o) { *this = *this + o; return *this; }
  BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }

  BigComplex operator*(const BigReal& s) const { return BigComplex(re_ * s, im_ * s); }
  BigComplex operator/(const BigReal& s) const { return BigComplex(re_ / s, im_ / s); }

  bool operator==(const BigComplex& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const BigComplex& o) const { return !(*this == o); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

 private:
  BigReal re_, im_;
};

inline BigComplex conj(const BigComplex& z) { return BigComplex(z.real(), -z.imag()); }
inline BigReal abs(const BigComplex& z) { return hypot(z.real(), z.imag()); }
BigComplex exp_i(const BigReal& theta);  // e^{i theta}

/// Principal-branch complex log, Arg in (-pi, pi].
BigComplex log_principal(const BigComplex& z);
/// Argument normalized to [0, 2pi) (the state-sum log convention).
BigReal arg_in_2pi(const BigComplex& z);

/// sqrt(x) for x >= 0, I*sqrt(|x|) for x < 0.
BigComplex principal_sqrt(const BigReal& x);

/// Complex square root on the principal branch.
BigComplex sqrt(const BigComplex& z);

/// I^k for k mod 4 (exact units).
BigComplex i_power(long k, const PrecisionContext& ctx);

}  // namespace tviro
