#include "tviro/sixj.hpp"

#include <algorithm>
#include <stdexcept>

namespace tviro {

BigReal quantum_number(int r, int s, int n, const PrecisionContext& ctx) {
  if (r < 3 || s < 1 || n < 0) throw std::invalid_argument("quantum_number: need r>=3, s>=1, n>=0");
  if ((static_cast<long>(s) % r) == 0)
    throw std::domain_error("quantum_number: sin(s pi / r) = 0, invalid level");
  if ((static_cast<long>(n) * s) % r == 0) return ctx.zero();
  const long num_red = (static_cast<long>(n) * s) % (2L * r);
  const long den_red = static_cast<long>(s) % (2L * r);
  BigReal pi_over_r = ctx.pi() / r;
  return sin(pi_over_r * num_red) / sin(pi_over_r * den_red);
}

BigReal quantum_factorial(int r, int s, int n, const PrecisionContext& ctx) {
  if (n < 0) throw std::invalid_argument("quantum_factorial: n >= 0 required");
  BigReal acc = ctx.real(1L);
  for (int k = 1; k <= n; ++k) acc *= quantum_number(r, s, k, ctx);
  return acc;
}

Level::Level(int r, int s, const PrecisionContext& ctx) : r_(r), s_(s), ctx_(ctx) {
  if (r < 3 || s < 1) throw std::invalid_argument("Level: need r >= 3, s >= 1");
  if ((static_cast<long>(s) % r) == 0)
    throw std::domain_error("Level: sin(s pi / r) = 0, invalid level");
  // [n] is needed up to the largest factorial argument z+1 <= 2(r-2)+1.
  const int n_max = 2 * r;
  qnum_.reserve(static_cast<size_t>(n_max) + 1);
  qfact_.reserve(static_cast<size_t>(n_max) + 1);
  BigReal pi_over_r = ctx.pi() / r;
  BigReal sin_den = sin(pi_over_r * (static_cast<long>(s) % (2L * r)));
  BigReal fact = ctx.real(1L);
  for (int n = 0; n <= n_max; ++n) {
    if ((static_cast<long>(n) * s) % r == 0) {
      qnum_.push_back(ctx.zero());
    } else {
      long red = (static_cast<long>(n) * s) % (2L * r);
      qnum_.push_back(sin(pi_over_r * red) / sin_den);
    }
    if (n > 0) fact *= qnum_.back();
    qfact_.push_back(fact);
  }
}

BigReal Level::edge_weight(HalfInt i) const {
  BigReal w = qnum(i.doubled() + 1);
  return (i.doubled() % 2 != 0) ? -w : w;
}

BigComplex Level::delta_coeff(HalfInt i, HalfInt j, HalfInt k) const {
  if (!is_admissible_triple(i, j, k, r_))
    throw std::domain_error("delta_coeff: triple not admissible");
  const int di = i.doubled(), dj = j.doubled(), dk = k.doubled();
  // All four factorial arguments are integers for an admissible triple.
  BigReal arg = qfact((di + dj - dk) / 2) * qfact((di + dk - dj) / 2) *
                qfact((dj + dk - di) / 2) / qfact((di + dj + dk) / 2 + 1);
  return principal_sqrt(arg);
}

SixJKey canonical_sixj_key(const std::array<int, 6>& t) {
  // Columns of the symbol are the pairs (i,l), (j,m), (k,n). The value is
  // invariant under permuting columns and flipping any two of them.
  static constexpr int perm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  static constexpr unsigned flips[4] = {0b000, 0b011, 0b101, 0b110};
  std::array<std::int16_t, 6> best{};
  bool have = false;
  for (const auto& p : perm3) {
    for (unsigned f : flips) {
      std::array<std::int16_t, 6> cand{};
      for (int c = 0; c < 3; ++c) {
        int top = t[p[c]], bot = t[p[c] + 3];
        if (f & (1u << c)) std::swap(top, bot);
        cand[static_cast<size_t>(c)] = static_cast<std::int16_t>(top);
        cand[static_cast<size_t>(c) + 3] = static_cast<std::int16_t>(bot);
      }
      if (!have || cand < best) {
        best = cand;
        have = true;
      }
    }
  }
  return SixJKey{best};
}

bool SixJCache::lookup(const SixJKey& key, BigComplex& out) const {
  Shard& sh = shards_[SixJKeyHash{}(key) % kShards];
  std::lock_guard<std::mutex> lock(sh.mutex);
  auto it = sh.map.find(key);
  if (it == sh.map.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return false;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  out = it->second;
  return true;
}

void SixJCache::store(const SixJKey& key, const BigComplex& value) {
  Shard& sh = shards_[SixJKeyHash{}(key) % kShards];
  std::lock_guard<std::mutex> lock(sh.mutex);
  sh.map.emplace(key, value);
}

size_t SixJCache::size() const {
  size_t n = 0;
  for (const auto& sh : shards_) {
    std::lock_guard<std::mutex> lock(sh.mutex);
    n += sh.map.size();
  }
  return n;
}

namespace {

BigComplex sixj_compute(const std::array<int, 6>& d, const Level& level, const SixJCache* stats) {
  const PrecisionContext& ctx = level.ctx();
  HalfInt i = HalfInt::from_doubled(d[0]), j = HalfInt::from_doubled(d[1]),
          k = HalfInt::from_doubled(d[2]), l = HalfInt::from_doubled(d[3]),
          m = HalfInt::from_doubled(d[4]), n = HalfInt::from_doubled(d[5]);
  if (!is_admissible_triple(i, j, k, level.r()) || !is_admissible_triple(j, l, n, level.r()) ||
      !is_admissible_triple(i, m, n, level.r()) || !is_admissible_triple(k, l, m, level.r()))
    throw std::domain_error("sixj_symbol: inadmissible triple in 6-tuple");

  BigComplex pre = level.delta_coeff(i, j, k) * level.delta_coeff(j, l, n) *
                   level.delta_coeff(i, m, n) * level.delta_coeff(k, l, m);

  // Doubled sums are even by admissibility; T and Q are plain integers.
  const int T[4] = {(d[0] + d[1] + d[2]) / 2, (d[1] + d[3] + d[5]) / 2,
                    (d[0] + d[4] + d[5]) / 2, (d[2] + d[3] + d[4]) / 2};
  const int Q[3] = {(d[0] + d[1] + d[3] + d[4]) / 2, (d[0] + d[2] + d[3] + d[5]) / 2,
                    (d[1] + d[2] + d[4] + d[5]) / 2};
  const int z_lo = *std::max_element(T, T + 4);
  const int z_hi = *std::min_element(Q, Q + 3);

  BigReal sum = ctx.zero();
  for (int z = z_lo; z <= z_hi; ++z) {
    BigReal den = level.qfact(z - T[0]);
    den *= level.qfact(z - T[1]);
    den *= level.qfact(z - T[2]);
    den *= level.qfact(z - T[3]);
    den *= level.qfact(Q[0] - z);
    den *= level.qfact(Q[1] - z);
    den *= level.qfact(Q[2] - z);
    BigReal t = level.qfact(z + 1) / den;
    if (z % 2 != 0) t = -t;
    sum += t;
  }

  // Prefactor I^(2S) with 2S = sum of the doubled colors, following the
  // computation that produced the reference tables (the definition's
  // I^(-2S) differs only when 2S is odd, which does occur; see stats).
  const long two_s = d[0] + d[1] + d[2] + d[3] + d[4] + d[5];
  if (two_s % 2 != 0 && stats != nullptr) stats->note_odd_exponent();
  return pre * i_power(two_s, ctx) * BigComplex(std::move(sum), ctx.zero());
}

}  // namespace

BigComplex sixj_symbol_raw(HalfInt i, HalfInt j, HalfInt k, HalfInt l, HalfInt m, HalfInt n,
                           const Level& level) {
  return sixj_compute({i.doubled(), j.doubled(), k.doubled(), l.doubled(), m.doubled(), n.doubled()},
                      level, nullptr);
}

BigComplex sixj_symbol(HalfInt i, HalfInt j, HalfInt k, HalfInt l, HalfInt m, HalfInt n,
                       const Level& level, SixJCache* cache) {
  SixJKey key = canonical_sixj_key(
      {i.doubled(), j.doubled(), k.doubled(), l.doubled(), m.doubled(), n.doubled()});
  if (cache != nullptr) {
    BigComplex hit;
    if (cache->lookup(key, hit)) return hit;
  }
  std::array<int, 6> canon;
  for (int idx = 0; idx < 6; ++idx) canon[static_cast<size_t>(idx)] = key.d[static_cast<size_t>(idx)];
  BigComplex value = sixj_compute(canon, level, cache);
  if (cache != nullptr) cache->store(key, value);
  return value;
}

}  // namespace tviro
