#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "tviro/bigfloat.hpp"
#include "tviro/halfint.hpp"

namespace tviro {

/// Quantum number [n] = sin(n s pi / r) / sin(s pi / r).
/// Exact zero whenever n*s is a multiple of r (the sine argument reduction
/// is done on integers mod 2r, so vanishing values do not pick up noise).
BigReal quantum_number(int r, int s, int n, const PrecisionContext& ctx);

/// Quantum factorial [n]! = [n][n-1]...[1], with [0]! = 1.
BigReal quantum_factorial(int r, int s, int n, const PrecisionContext& ctx);

/// Precomputed quantum data for one level (r, s) at one precision.
class Level {
 public:
  Level(int r, int s, const PrecisionContext& ctx);

  int r() const { return r_; }
  int s() const { return s_; }
  const PrecisionContext& ctx() const { return ctx_; }

  const BigReal& qnum(int n) const { return qnum_.at(static_cast<size_t>(n)); }
  const BigReal& qfact(int n) const { return qfact_.at(static_cast<size_t>(n)); }

  /// Edge weight w_i = (-1)^(2i) [2i+1].
  BigReal edge_weight(HalfInt i) const;

  /// Delta(i,j,k) via principal_sqrt of the factorial ratio; the result
  /// is exactly real or exactly purely imaginary.
  BigComplex delta_coeff(HalfInt i, HalfInt j, HalfInt k) const;

 private:
  int r_, s_;
  PrecisionContext ctx_;
  std::vector<BigReal> qnum_, qfact_;
};

/// Cache key: the six doubled colors in canonical (orbit-minimal) order.
struct SixJKey {
  std::array<std::int16_t, 6> d;
  bool operator==(const SixJKey&) const = default;
};

struct SixJKeyHash {
  size_t operator()(const SixJKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : k.d) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint16_t>(v));
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

/// Canonical representative of the symmetry orbit of a 6-tuple: the
/// lexicographic minimum over the group generated by the allowed
/// permutations (column permutations plus two-column row flips).
SixJKey canonical_sixj_key(const std::array<int, 6>& doubled);

/// Memoizes symbols for one level; sharded for concurrent access.
/// Writes are idempotent, duplicate concurrent computation is harmless.
class SixJCache {
 public:
  SixJCache() = default;

  bool lookup(const SixJKey& key, BigComplex& out) const;
  void store(const SixJKey& key, const BigComplex& value);

  std::uint64_t hits() const { return hits_.load(std::memory_order_relaxed); }
  std::uint64_t misses() const { return misses_.load(std::memory_order_relaxed); }
  std::uint64_t odd_exponent_count() const { return odd_2s_.load(std::memory_order_relaxed); }
  void note_odd_exponent() const { odd_2s_.fetch_add(1, std::memory_order_relaxed); }
  size_t size() const;

 private:
  static constexpr size_t kShards = 64;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<SixJKey, BigComplex, SixJKeyHash> map;
  };
  mutable std::array<Shard, kShards> shards_;
  mutable std::atomic<std::uint64_t> hits_{0}, misses_{0}, odd_2s_{0};
};

/// Quantum 6j symbol evaluated from the arguments exactly as given
/// (no canonicalization). Throws if one of the four triples
/// (i,j,k), (j,l,n), (i,m,n), (k,l,m) is not admissible.
BigComplex sixj_symbol_raw(HalfInt i, HalfInt j, HalfInt k, HalfInt l, HalfInt m, HalfInt n,
                           const Level& level);

/// Canonicalizing evaluation: the symbol is always computed from the
/// canonical orbit representative, so cached and uncached runs are
/// bit-identical. Pass cache = nullptr to disable memoization.
BigComplex sixj_symbol(HalfInt i, HalfInt j, HalfInt k, HalfInt l, HalfInt m, HalfInt n,
                       const Level& level, SixJCache* cache);

}  // namespace tviro
