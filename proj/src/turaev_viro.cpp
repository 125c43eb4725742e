#include "tviro/turaev_viro.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace tviro {

BigComplex coloring_term(const Coloring& col, int g, const Level& level, SixJCache* cache) {
  const size_t n = static_cast<size_t>(g) + 1;
  BigComplex acc(level.edge_weight(col.a) * level.edge_weight(col.b), level.ctx().zero());
  for (size_t i = 0; i < n; ++i) {
    const HalfInt ci = col.c[i];
    const HalfInt prev = col.c[(i + n - 1) % n];
    const HalfInt next = col.c[(i + 1) % n];
    acc = acc * BigComplex(level.edge_weight(ci), level.ctx().zero());
    acc = acc * sixj_symbol(col.a, col.b, col.b, ci, ci, prev, level, cache);
    acc = acc * sixj_symbol(col.a, col.b, col.b, ci, ci, next, level, cache);
  }
  return acc;
}

BigComplex coloring_term_figures(const Coloring& col, int g, const Level& level) {
  const size_t n = static_cast<size_t>(g) + 1;
  BigComplex acc(level.edge_weight(col.a) * level.edge_weight(col.b), level.ctx().zero());
  for (size_t i = 0; i < n; ++i) {
    const HalfInt ci = col.c[i];
    const HalfInt prev = col.c[(i + n - 1) % n];
    const HalfInt next = col.c[(i + 1) % n];
    acc = acc * BigComplex(level.edge_weight(ci), level.ctx().zero());
    // |b a b; c_i c_i c_{i-1}| and |b a b; c_{i+1} c_i c_i|, as read off
    // the colored tetrahedra before any symbol reordering.
    acc = acc * sixj_symbol_raw(col.b, col.a, col.b, ci, ci, prev, level);
    acc = acc * sixj_symbol_raw(col.b, col.a, col.b, next, ci, ci, level);
  }
  return acc;
}

namespace {

struct PartitionSum {
  BigComplex sum;
  std::uint64_t count = 0;
  long max_term_exp = LONG_MIN;
};

long term_magnitude_exp(const BigComplex& t) {
  long e = LONG_MIN;
  if (!t.real().is_zero()) e = std::max(e, t.real().exponent());
  if (!t.imag().is_zero()) e = std::max(e, t.imag().exponent());
  return e;
}

}  // namespace

TVResult tv_invariant(int g, int r, int s, const PrecisionContext& ctx, const TvOptions& options) {
  if (g < 2 || r < 3 || s < 1)
    throw std::invalid_argument("tv_invariant: need g >= 2, r >= 3, s >= 1");
  const auto t0 = std::chrono::steady_clock::now();

  Level level(r, s, ctx);
  SixJCache cache;
  SixJCache* cache_ptr = options.use_cache ? &cache : nullptr;

  const auto partitions = ab_partitions(g, r);
  std::vector<PartitionSum> sums(partitions.size());
  for (auto& ps : sums) ps.sum = BigComplex(ctx.zero(), ctx.zero());

  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    for (size_t p = 0; p < partitions.size(); ++p) {
      enumerate_fast_partition(g, r, partitions[p].first, partitions[p].second,
                               [&](const Coloring& col) {
                                 BigComplex t = coloring_term(col, g, level, cache_ptr);
                                 sums[p].max_term_exp =
                                     std::max(sums[p].max_term_exp, term_magnitude_exp(t));
                                 sums[p].sum += t;
                                 ++sums[p].count;
                               });
    }
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const size_t p = next.fetch_add(1);
        if (p >= partitions.size()) return;
        enumerate_fast_partition(g, r, partitions[p].first, partitions[p].second,
                                 [&](const Coloring& col) {
                                   BigComplex t = coloring_term(col, g, level, cache_ptr);
                                   sums[p].max_term_exp =
                                       std::max(sums[p].max_term_exp, term_magnitude_exp(t));
                                   sums[p].sum += t;
                                   ++sums[p].count;
                                 });
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  TVResult res;
  res.tv = BigComplex(ctx.zero(), ctx.zero());
  long max_exp = LONG_MIN;
  for (const auto& ps : sums) {
    res.tv += ps.sum;
    res.term_count += ps.count;
    max_exp = std::max(max_exp, ps.max_term_exp);
  }
  res.g = g;
  res.r = r;
  res.s = s;
  res.precision_bits = ctx.mantissa_bits();
  res.qv = res.tv.is_zero() ? BigComplex(ctx.zero(), ctx.zero()) : qv_from_tv(res.tv, r, s, ctx);
  const long tv_exp = term_magnitude_exp(res.tv);
  if (max_exp != LONG_MIN && tv_exp != LONG_MIN)
    res.max_term_ratio = std::pow(2.0, static_cast<double>(max_exp - tv_exp));
  res.cache_hits = cache.hits();
  res.cache_misses = cache.misses();
  res.cache_size = cache.size();
  res.odd_exponent_count = cache.odd_exponent_count();
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

BigComplex qv_from_tv(const BigComplex& tv, int r, int s, const PrecisionContext& ctx) {
  if (tv.is_zero()) throw std::domain_error("qv_from_tv: tv = 0, log undefined");
  BigReal scale = ctx.pi() * s / (r - 2);
  BigReal mag = log(abs(tv));
  BigReal arg = arg_in_2pi(tv);
  return BigComplex(scale * mag, scale * arg);
}

BigComplex qv_invariant(int g, int r, int s, const PrecisionContext& ctx, const TvOptions& options) {
  TVResult res = tv_invariant(g, r, s, ctx, options);
  if (res.tv.is_zero()) throw std::domain_error("qv_invariant: tv = 0, log undefined");
  return res.qv;
}

}  // namespace tviro
