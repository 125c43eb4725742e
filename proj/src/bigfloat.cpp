#include "tviro/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace tviro {

namespace {
mpfr_prec_t join(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigReal BigReal::from_double(double v, mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_set_d(r.raw(), v, MPFR_RNDN);
  return r;
}

BigReal BigReal::from_long(long v, mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_set_si(r.raw(), v, MPFR_RNDN);
  return r;
}

BigReal BigReal::from_string(const std::string& decimal, mpfr_prec_t prec) {
  BigReal r(prec);
  if (mpfr_set_str(r.raw(), decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("BigReal: cannot parse decimal '" + decimal + "'");
  return r;
}

BigReal BigReal::rounded_to(mpfr_prec_t prec) const {
  BigReal r(prec);
  mpfr_set(r.raw(), x_, MPFR_RNDN);
  return r;
}

std::string BigReal::str(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  std::vector<char> buf(static_cast<size_t>(significant_digits) + 32);
  int n = mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", significant_digits, x_);
  if (n < 0 || static_cast<size_t>(n) >= buf.size()) {
    buf.resize(static_cast<size_t>(std::max(n + 1, 64)));
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", significant_digits, x_);
  }
  return std::string(buf.data());
}

BigReal BigReal::operator-() const {
  BigReal r(precision());
  mpfr_neg(r.raw(), x_, MPFR_RNDN);
  return r;
}

BigReal BigReal::operator+(const BigReal& o) const {
  BigReal r(join(*this, o));
  mpfr_add(r.raw(), x_, o.x_, MPFR_RNDN);
  return r;
}

BigReal BigReal::operator-(const BigReal& o) const {
  BigReal r(join(*this, o));
  mpfr_sub(r.raw(), x_, o.x_, MPFR_RNDN);
  return r;
}

BigReal BigReal::operator*(const BigReal& o) const {
  BigReal r(join(*this, o));
  mpfr_mul(r.raw(), x_, o.x_, MPFR_RNDN);
  return r;
}

BigReal BigReal::operator/(const BigReal& o) const {
  BigReal r(join(*this, o));
  mpfr_div(r.raw(), x_, o.x_, MPFR_RNDN);
  return r;
}

BigReal BigReal::operator*(long v) const {
  BigReal r(precision());
  mpfr_mul_si(r.raw(), x_, v, MPFR_RNDN);
  return r;
}

BigReal BigReal::operator/(long v) const {
  BigReal r(precision());
  mpfr_div_si(r.raw(), x_, v, MPFR_RNDN);
  return r;
}

#define TVIRO_UNARY(name, mpfr_fn)            \
  BigReal name(const BigReal& x) {            \
    BigReal r(x.precision());                 \
    mpfr_fn(r.raw(), x.raw(), MPFR_RNDN);     \
    return r;                                 \
  }

TVIRO_UNARY(abs, mpfr_abs)
TVIRO_UNARY(exp, mpfr_exp)
TVIRO_UNARY(log, mpfr_log)
TVIRO_UNARY(sin, mpfr_sin)
TVIRO_UNARY(cos, mpfr_cos)
TVIRO_UNARY(acos, mpfr_acos)
#undef TVIRO_UNARY

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(join(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw std::domain_error("sqrt: negative argument (see principal_sqrt)");
  BigReal r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal r(join(x, y));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigReal PrecisionContext::real(double v) const { return BigReal::from_double(v, bits_); }
BigReal PrecisionContext::real(long v) const { return BigReal::from_long(v, bits_); }
BigReal PrecisionContext::real(const std::string& s) const { return BigReal::from_string(s, bits_); }
BigReal PrecisionContext::zero() const { return BigReal(bits_); }

BigReal PrecisionContext::pi() const {
  BigReal r(bits_);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigComplex PrecisionContext::complex(double re, double im) const {
  return BigComplex(real(re), real(im));
}

BigComplex exp_i(const BigReal& theta) {
  BigReal s(theta.precision()), c(theta.precision());
  mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
  return BigComplex(std::move(c), std::move(s));
}

BigComplex log_principal(const BigComplex& z) {
  if (z.is_zero()) throw std::domain_error("log: zero argument");
  return BigComplex(log(abs(z)), atan2(z.imag(), z.real()));
}

BigReal arg_in_2pi(const BigComplex& z) {
  BigReal a = atan2(z.imag(), z.real());
  if (a.sign() < 0) {
    BigReal two_pi(a.precision());
    mpfr_const_pi(two_pi.raw(), MPFR_RNDN);
    a += two_pi * 2;
  }
  return a;
}

BigComplex principal_sqrt(const BigReal& x) {
  BigReal zero(x.precision());
  if (x.sign() >= 0) return BigComplex(sqrt(x), std::move(zero));
  return BigComplex(std::move(zero), sqrt(-x));
}

BigComplex sqrt(const BigComplex& z) {
  if (z.imag().is_zero()) return principal_sqrt(z.real());
  // r = |z|; sqrt = sqrt((r+re)/2) + i sign(im) sqrt((r-re)/2)
  BigReal r = abs(z);
  BigReal u = sqrt((r + z.real()) / 2);
  BigReal v = sqrt((r - z.real()) / 2);
  if (z.imag().sign() < 0) v = -v;
  return BigComplex(std::move(u), std::move(v));
}

BigComplex i_power(long k, const PrecisionContext& ctx) {
  long m = ((k % 4) + 4) % 4;
  BigReal one = ctx.real(1L), zero = ctx.zero();
  switch (m) {
    case 0: return BigComplex(one, zero);
    case 1: return BigComplex(zero, one);
    case 2: return BigComplex(-one, zero);
    default: return BigComplex(zero, -one);
  }
}

}  // namespace tviro
