#pragma once

#include "tviro/bigfloat.hpp"

namespace tviro {

/// Complex dilogarithm Li2 on the principal branch (cut along [1, inf)).
///
/// The branch point z = 1 is accepted and evaluates to the boundary limit
/// pi^2/6; a real argument strictly beyond 1 (outside a 2^(-bits/2)
/// tolerance band) raises std::domain_error.
BigComplex dilog(const BigComplex& z, const PrecisionContext& ctx);

BigComplex dilog(const BigReal& x, const PrecisionContext& ctx);

}  // namespace tviro
