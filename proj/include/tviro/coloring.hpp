#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tviro/halfint.hpp"

namespace tviro {

/// One admissible edge coloring of the genus-g triangulation:
/// colors a, b plus the cyclic chain c_0..c_g.
struct Coloring {
  HalfInt a, b;
  std::vector<HalfInt> c;

  bool operator==(const Coloring&) const = default;
  auto operator<=>(const Coloring&) const = default;
};

using ColoringVisitor = std::function<void(const Coloring&)>;

/// The outer (a, b) pairs of the nested enumeration, in loop order.
/// Each pair is an independently enumerable partition of the state set.
std::vector<std::pair<int, int>> ab_partitions(int g, int r);

/// Streams the colorings of one (a, b) partition: integer-branch chains
/// first, then half-odd chains, each in lexicographic c order.
void enumerate_fast_partition(int g, int r, int a_doubled, int b_doubled,
                              const ColoringVisitor& visit);

/// Streams all admissible colorings via the pruned nested-bound loops,
/// in deterministic order (a, then b, then the two parity branches).
void enumerate_fast(int g, int r, const ColoringVisitor& visit);

/// Brute-force reference: filters the full product I_r^(g+3) through the
/// raw per-tetrahedron triple conditions. Guarded against infeasible sizes
/// ((r-1)^(g+3) must stay within 10^9).
void enumerate_oracle(int g, int r, const ColoringVisitor& visit);

std::uint64_t count_admissible(int g, int r);

std::vector<Coloring> collect_fast(int g, int r);
std::vector<Coloring> collect_oracle(int g, int r);

}  // namespace tviro
