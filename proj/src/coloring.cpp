#include "tviro/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tviro {

namespace {

// Smallest doubled value >= lo with the requested parity (0 = integer
// colors, 1 = half-odd colors).
int first_with_parity(int lo, int parity) {
  if (lo < parity) return parity;
  return ((lo - parity) % 2 == 0) ? lo : lo + 1;
}

struct ChainEnumerator {
  int g, r, a2, b2, mab2;  // doubled a, b, min(a,b)
  int parity;
  const ColoringVisitor* visit;
  std::vector<int> chain;  // doubled c values

  void run() {
    // c_0 bounds: b/2 <= c_0 <= (r-2-b)/2 (the wrap conditions against
    // c_g are checked once the chain is complete).
    const int lo = b2 / 2;
    const int hi = r - 2 - b2 / 2;
    for (int c0 = first_with_parity(lo, parity); c0 <= hi; c0 += 2) {
      chain.clear();
      chain.push_back(c0);
      extend();
    }
  }

  void extend() {
    if (static_cast<int>(chain.size()) == g + 1) {
      const int c0 = chain.front(), cg = chain.back();
      // Closing conditions pairing (c_g, c_0).
      if (cg - c0 < -mab2 || cg - c0 > mab2) return;
      if (cg + c0 < a2 || cg + c0 > 2 * (r - 2) - a2) return;
      emit();
      return;
    }
    const int cp = chain.back();
    const int lo = std::max({b2 / 2, a2 - cp, cp - mab2});
    const int hi = std::min({r - 2 - b2 / 2, 2 * (r - 2) - a2 - cp, cp + mab2});
    for (int c = first_with_parity(lo, parity); c <= hi; c += 2) {
      chain.push_back(c);
      extend();
      chain.pop_back();
    }
  }

  void emit() const {
    Coloring col;
    col.a = HalfInt::from_doubled(a2);
    col.b = HalfInt::from_doubled(b2);
    col.c.reserve(chain.size());
    for (int d : chain) col.c.push_back(HalfInt::from_doubled(d));
    (*visit)(col);
  }
};

}  // namespace

std::vector<std::pair<int, int>> ab_partitions(int g, int r) {
  if (g < 2 || r < 3) throw std::invalid_argument("ab_partitions: need g >= 2, r >= 3");
  std::vector<std::pair<int, int>> out;
  for (int a = 0; 2 * a <= r - 2; ++a) {
    for (int b = (a + 1) / 2; 2 * b <= r - 2 - a; ++b) out.emplace_back(2 * a, 2 * b);
  }
  return out;
}

void enumerate_fast_partition(int g, int r, int a_doubled, int b_doubled,
                              const ColoringVisitor& visit) {
  ChainEnumerator e;
  e.g = g;
  e.r = r;
  e.a2 = a_doubled;
  e.b2 = b_doubled;
  e.mab2 = std::min(a_doubled, b_doubled);
  e.visit = &visit;
  for (int parity : {0, 1}) {
    e.parity = parity;
    e.run();
  }
}

void enumerate_fast(int g, int r, const ColoringVisitor& visit) {
  for (auto [a2, b2] : ab_partitions(g, r)) enumerate_fast_partition(g, r, a2, b2, visit);
}

void enumerate_oracle(int g, int r, const ColoringVisitor& visit) {
  if (g < 2 || r < 3) throw std::invalid_argument("enumerate_oracle: need g >= 2, r >= 3");
  const double states = std::pow(static_cast<double>(r - 1), g + 3);
  if (states > 1e9)
    throw std::domain_error("enumerate_oracle: (r-1)^(g+3) exceeds the feasibility guard");

  ColorRange range(r);
  const auto colors = range.elements();
  std::vector<HalfInt> c(static_cast<size_t>(g) + 1);

  std::function<void(int, HalfInt, HalfInt)> rec = [&](int depth, HalfInt a, HalfInt b) {
    if (depth == g + 1) {
      // Raw conditions: the seven families of tetrahedron triples.
      if (!is_admissible_triple(a, c[static_cast<size_t>(g)], c[0], r)) return;
      if (!is_admissible_triple(b, c[static_cast<size_t>(g)], c[static_cast<size_t>(g)], r)) return;
      if (!is_admissible_triple(b, c[static_cast<size_t>(g)], c[0], r)) return;
      for (int i = 0; i < g; ++i) {
        const auto ci = c[static_cast<size_t>(i)], cn = c[static_cast<size_t>(i) + 1];
        if (!is_admissible_triple(a, ci, cn, r)) return;
        if (!is_admissible_triple(b, ci, ci, r)) return;
        if (!is_admissible_triple(b, ci, cn, r)) return;
      }
      visit(Coloring{a, b, c});
      return;
    }
    for (HalfInt x : colors) {
      c[static_cast<size_t>(depth)] = x;
      rec(depth + 1, a, b);
    }
  };

  for (HalfInt a : colors) {
    for (HalfInt b : colors) {
      if (!is_admissible_triple(a, b, b, r)) continue;
      rec(0, a, b);
    }
  }
}

std::uint64_t count_admissible(int g, int r) {
  std::uint64_t n = 0;
  enumerate_fast(g, r, [&n](const Coloring&) { ++n; });
  return n;
}

std::vector<Coloring> collect_fast(int g, int r) {
  std::vector<Coloring> out;
  enumerate_fast(g, r, [&out](const Coloring& c) { out.push_back(c); });
  return out;
}

std::vector<Coloring> collect_oracle(int g, int r) {
  std::vector<Coloring> out;
  enumerate_oracle(g, r, [&out](const Coloring& c) { out.push_back(c); });
  return out;
}

}  // namespace tviro
