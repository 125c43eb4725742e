#include "tviro/dilog.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <mutex>
#include <vector>

namespace tviro {

namespace {

constexpr unsigned kGuardBits = 64;

// Bernoulli numbers B_n as exact rationals, extended on demand.
// B_0 = 1, B_1 = -1/2, odd ones beyond vanish.
std::vector<mpq_class> g_bernoulli;
std::mutex g_bernoulli_mutex;

void ensure_bernoulli(size_t n) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  if (g_bernoulli.empty()) g_bernoulli.emplace_back(1);
  while (g_bernoulli.size() <= n) {
    size_t m = g_bernoulli.size();
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    mpq_class acc(0);
    mpz_class binom;
    for (size_t j = 0; j < m; ++j) {
      if (j > 1 && (j % 2) == 1) continue;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1),
                   static_cast<unsigned long>(j));
      acc += mpq_class(binom) * g_bernoulli[j];
    }
    acc /= static_cast<long>(m + 1);
    g_bernoulli.push_back(-acc);
  }
}

BigReal bernoulli_as_real(size_t n, mpfr_prec_t prec) {
  ensure_bernoulli(n);
  BigReal r(prec);
  mpq_class q;
  {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    q = g_bernoulli[n];
  }
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

long magnitude_exp(const BigComplex& z) {
  if (z.is_zero()) return LONG_MIN / 2;
  long er = z.real().is_zero() ? LONG_MIN / 2 : z.real().exponent();
  long ei = z.imag().is_zero() ? LONG_MIN / 2 : z.imag().exponent();
  return std::max(er, ei);
}

BigReal pi_sq_over_6(const PrecisionContext& wctx) {
  BigReal pi = wctx.pi();
  return pi * pi / 6;
}

// Power series sum_{k>=1} z^k / k^2, for |z| <= 1/2.
BigComplex dilog_power_series(const BigComplex& z, const PrecisionContext& wctx) {
  const long cutoff = static_cast<long>(wctx.mantissa_bits()) + 8;
  BigComplex acc = z;
  BigComplex zk = z;
  for (long k = 2;; ++k) {
    zk *= z;
    BigComplex term = zk / BigReal::from_long(k * k, wctx.mantissa_bits());
    acc += term;
    if (magnitude_exp(term) < magnitude_exp(acc) - cutoff) break;
  }
  return acc;
}

// Series in u = -ln(1-z): Li2(z) = sum_n B_n u^(n+1) / (n+1)!,
// convergent for |u| < 2 pi. Used on the unit-disk lune where neither
// the power series nor a reflection/inversion hop reaches |z| <= 1/2.
BigComplex dilog_log_series(const BigComplex& z, const PrecisionContext& wctx) {
  const long cutoff = static_cast<long>(wctx.mantissa_bits()) + 8;
  BigComplex one(wctx.real(1L), wctx.zero());
  BigComplex u = -log_principal(one - z);

  BigComplex acc = u;
  BigComplex upow = u;
  BigReal fact = wctx.real(1L);
  for (long n = 1;; ++n) {
    upow *= u;
    fact *= (n + 1);
    if (n > 1 && (n % 2) == 1) continue;
    BigComplex term = upow * (bernoulli_as_real(static_cast<size_t>(n), wctx.mantissa_bits()) / fact);
    acc += term;
    if (n > 2 && magnitude_exp(term) < magnitude_exp(acc) - cutoff) break;
  }
  return acc;
}

BigComplex dilog_core(const BigComplex& z, const PrecisionContext& wctx) {
  BigReal half = wctx.real(1L) / 2;
  if (abs(z) <= half) return dilog_power_series(z, wctx);
  return dilog_log_series(z, wctx);
}

BigComplex dilog_reduce(const BigComplex& z, const PrecisionContext& wctx) {
  BigComplex one(wctx.real(1L), wctx.zero());
  BigReal r = abs(z);
  if (r > wctx.real(1L)) {
    // Li2(z) = -Li2(1/z) - pi^2/6 - ln(-z)^2 / 2
    BigComplex inv = one / z;
    BigComplex lnz = log_principal(-z);
    return -dilog_reduce(inv, wctx) - BigComplex(pi_sq_over_6(wctx), wctx.zero()) -
           lnz * lnz / wctx.real(2L);
  }
  if (z.real() * 2 > wctx.real(1L)) {
    // Li2(z) = pi^2/6 - ln(z) ln(1-z) - Li2(1-z)
    BigComplex w = one - z;
    return BigComplex(pi_sq_over_6(wctx), wctx.zero()) - log_principal(z) * log_principal(w) -
           dilog_core(w, wctx);
  }
  return dilog_core(z, wctx);
}

}  // namespace

BigComplex dilog(const BigComplex& z, const PrecisionContext& ctx) {
  PrecisionContext wctx = ctx.widened(kGuardBits);
  const mpfr_prec_t bits = ctx.mantissa_bits();

  BigReal re = z.real().rounded_to(wctx.mantissa_bits());
  BigReal im = z.imag().rounded_to(wctx.mantissa_bits());

  if (re.is_zero() && im.is_zero()) return BigComplex(ctx.zero(), ctx.zero());

  if (im.is_zero()) {
    // Boundary band around the branch point z = 1 evaluates to the limit.
    BigReal one = wctx.real(1L);
    BigReal dist = abs(re - one);
    BigReal tol(wctx.mantissa_bits());
    mpfr_set_ui_2exp(tol.raw(), 1, -static_cast<long>(bits / 2), MPFR_RNDN);
    if (dist <= tol) {
      BigReal v = pi_sq_over_6(wctx);
      return BigComplex(v.rounded_to(bits), ctx.zero());
    }
    if (re > one) throw std::domain_error("dilog: argument on the branch cut (1, inf)");
  }

  BigComplex res = dilog_reduce(BigComplex(std::move(re), std::move(im)), wctx);
  return BigComplex(res.real().rounded_to(bits), res.imag().rounded_to(bits));
}

BigComplex dilog(const BigReal& x, const PrecisionContext& ctx) {
  return dilog(BigComplex(x, BigReal(x.precision())), ctx);
}

}  // namespace tviro
