#pragma once

#include "tviro/bigfloat.hpp"
#include "tviro/dilog.hpp"

namespace tviro {

/// Dihedral angles of a generalized hyperbolic tetrahedron, each in
/// [0, pi]. Slot order matches the Gram-matrix convention below.
struct TetrahedronAngles {
  BigReal A, B, C, D, E, F;

  static TetrahedronAngles from_doubles(double a, double b, double c, double d, double e, double f,
                                        const PrecisionContext& ctx);
};

/// The complete angle structure of the genus-g triangulation:
/// alpha = pi/(2g+2), beta = 2 alpha, gamma = arccos(1/(2 cos alpha)),
/// delta = pi - 2 gamma.
struct FrigerioAngles {
  BigReal alpha, beta, gamma, delta;
  int g = 0;

  /// The volume-formula slot assignment (gamma, delta, gamma, alpha, beta, alpha).
  TetrahedronAngles tetrahedron() const;
};

/// Determinant of the Gram matrix (1 on the diagonal, -cos of the paired
/// angle off it). Negative for genuinely hyperbolic tetrahedra.
BigReal gram_det(const TetrahedronAngles& t);

/// U(z, T) = (Li2(z) + Li2(abdez) + Li2(acdfz) + Li2(bcefz)
///          - Li2(-abcz) - Li2(-aefz) - Li2(-bdfz) - Li2(-cdez)) / 2,
/// with a..f = exp(I * angle).
BigComplex u_function(const BigComplex& z, const TetrahedronAngles& t, const PrecisionContext& ctx);

struct TetrahedronRoots {
  BigComplex z_plus, z_minus;
};

/// The two roots z in the volume formula; sqrt(det G) is taken with the
/// principal convention (purely imaginary for det G < 0).
TetrahedronRoots z_plus_minus(const TetrahedronAngles& t, const PrecisionContext& ctx);

/// Vol(T) = Im(U(z-, T) - U(z+, T)) / 2.
BigReal tetrahedron_volume(const TetrahedronAngles& t, const PrecisionContext& ctx);

FrigerioAngles frigerio_angles(int g, const PrecisionContext& ctx);

/// Volume of one triangulation tetrahedron at genus g.
BigReal tetrahedron_volume(int g, const PrecisionContext& ctx);

/// Vol(M_g) = (2g+2) * Vol(T_g).
BigReal manifold_volume(int g, const PrecisionContext& ctx);

}  // namespace tviro
