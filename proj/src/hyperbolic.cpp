#include "tviro/hyperbolic.hpp"

#include <stdexcept>

#include "tviro/eigen_support.hpp"

namespace tviro {

TetrahedronAngles TetrahedronAngles::from_doubles(double a, double b, double c, double d, double e,
                                                  double f, const PrecisionContext& ctx) {
  return TetrahedronAngles{ctx.real(a), ctx.real(b), ctx.real(c), ctx.real(d), ctx.real(e), ctx.real(f)};
}

TetrahedronAngles FrigerioAngles::tetrahedron() const {
  return TetrahedronAngles{gamma, delta, gamma, alpha, beta, alpha};
}

BigReal gram_det(const TetrahedronAngles& t) {
  BigRealMatrix4 G;
  const BigReal one = BigReal::from_long(1, t.A.precision());
  G(0, 0) = one;       G(0, 1) = -cos(t.A); G(0, 2) = -cos(t.B); G(0, 3) = -cos(t.F);
  G(1, 0) = G(0, 1);   G(1, 1) = one;       G(1, 2) = -cos(t.C); G(1, 3) = -cos(t.E);
  G(2, 0) = G(0, 2);   G(2, 1) = G(1, 2);   G(2, 2) = one;       G(2, 3) = -cos(t.D);
  G(3, 0) = G(0, 3);   G(3, 1) = G(1, 3);   G(3, 2) = G(2, 3);   G(3, 3) = one;
  return G.determinant();
}

BigComplex u_function(const BigComplex& z, const TetrahedronAngles& t, const PrecisionContext& ctx) {
  const BigComplex a = exp_i(t.A), b = exp_i(t.B), c = exp_i(t.C);
  const BigComplex d = exp_i(t.D), e = exp_i(t.E), f = exp_i(t.F);

  BigComplex acc = dilog(z, ctx);
  acc += dilog(a * b * d * e * z, ctx);
  acc += dilog(a * c * d * f * z, ctx);
  acc += dilog(b * c * e * f * z, ctx);
  acc = acc - dilog(-(a * b * c * z), ctx);
  acc = acc - dilog(-(a * e * f * z), ctx);
  acc = acc - dilog(-(b * d * f * z), ctx);
  acc = acc - dilog(-(c * d * e * z), ctx);
  return acc / ctx.real(2L);
}

TetrahedronRoots z_plus_minus(const TetrahedronAngles& t, const PrecisionContext& ctx) {
  const BigComplex a = exp_i(t.A), b = exp_i(t.B), c = exp_i(t.C);
  const BigComplex d = exp_i(t.D), e = exp_i(t.E), f = exp_i(t.F);

  BigComplex den = a * d + b * e + c * f + a * b * f + a * c * e + b * c * d + d * e * f +
                   a * b * c * d * e * f;
  if (den.is_zero()) throw std::domain_error("z_plus_minus: degenerate tetrahedron (zero denominator)");

  BigComplex num(sin(t.A) * sin(t.D) + sin(t.B) * sin(t.E) + sin(t.C) * sin(t.F), ctx.zero());
  BigComplex root = principal_sqrt(gram_det(t));
  BigReal minus_two = ctx.real(-2L);

  TetrahedronRoots out;
  out.z_plus = (num + root) / den * minus_two;
  out.z_minus = (num - root) / den * minus_two;
  return out;
}

BigReal tetrahedron_volume(const TetrahedronAngles& t, const PrecisionContext& ctx) {
  TetrahedronRoots z = z_plus_minus(t, ctx);
  BigComplex diff = u_function(z.z_minus, t, ctx) - u_function(z.z_plus, t, ctx);
  return diff.imag() / 2;
}

FrigerioAngles frigerio_angles(int g, const PrecisionContext& ctx) {
  if (g < 2) throw std::invalid_argument("frigerio_angles: g >= 2 required");
  FrigerioAngles out;
  out.g = g;
  out.alpha = ctx.pi() / (2L * g + 2);
  out.beta = out.alpha * 2;
  out.gamma = acos(ctx.real(1L) / (cos(out.alpha) * 2));
  out.delta = ctx.pi() - out.gamma * 2;
  return out;
}

BigReal tetrahedron_volume(int g, const PrecisionContext& ctx) {
  return tetrahedron_volume(frigerio_angles(g, ctx).tetrahedron(), ctx);
}

BigReal manifold_volume(int g, const PrecisionContext& ctx) {
  return tetrahedron_volume(g, ctx) * (2L * g + 2);
}

}  // namespace tviro
