#pragma once

#include <cstdint>
#include <memory>

#include "tviro/bigfloat.hpp"
#include "tviro/coloring.hpp"
#include "tviro/sixj.hpp"

namespace tviro {

struct TVResult {
  BigComplex tv;
  BigComplex qv;
  int g = 0, r = 0, s = 0;
  unsigned precision_bits = 0;
  std::uint64_t term_count = 0;
  double wall_seconds = 0.0;
  /// Cancellation diagnostic: max |term| / |tv| over the summation.
  double max_term_ratio = 0.0;
  std::uint64_t cache_hits = 0, cache_misses = 0, cache_size = 0;
  std::uint64_t odd_exponent_count = 0;
};

struct TvOptions {
  int threads = 1;
  bool use_cache = true;
};

/// The summand of one admissible coloring: the edge weights times the
/// 2g+2 tetrahedron symbols pairing each c_i with its cyclic neighbours.
BigComplex coloring_term(const Coloring& col, int g, const Level& level, SixJCache* cache);

/// Same term with the symbols arranged as read off the triangulation
/// figures (|b a b; ...| entries, evaluated without canonicalization).
/// Equal to coloring_term by the allowed symbol permutations; kept as an
/// independent route for the end-to-end permutation check.
BigComplex coloring_term_figures(const Coloring& col, int g, const Level& level);

/// State sum over all admissible colorings (regular-vertices factor is 1:
/// the triangulations have no regular vertices). Serial mode accumulates
/// in enumeration order; parallel mode sums per (a, b) partition and
/// combines partitions in fixed order.
TVResult tv_invariant(int g, int r, int s, const PrecisionContext& ctx,
                      const TvOptions& options = {});

/// log(tv) scaled by s pi / (r-2), with the argument taken in [0, 2pi)
/// (negative tv therefore yields imaginary part s pi^2 / (r-2)).
BigComplex qv_from_tv(const BigComplex& tv, int r, int s, const PrecisionContext& ctx);

BigComplex qv_invariant(int g, int r, int s, const PrecisionContext& ctx,
                        const TvOptions& options = {});

}  // namespace tviro
