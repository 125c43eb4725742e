#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "tviro/dilog.hpp"

using namespace tviro;
using tvtest::close_abs;
using tvtest::dec;

namespace {
const PrecisionContext ctx(256);
}

TEST_CASE("BigReal arithmetic and rendering") {
  BigReal a = ctx.real(1.5), b = ctx.real(-0.25);
  CHECK((a + b).to_double() == doctest::Approx(1.25));
  CHECK((a * b).to_double() == doctest::Approx(-0.375));
  CHECK((a / b).to_double() == doctest::Approx(-6.0));
  CHECK(a.precision() == 256);
  CHECK((a + b).precision() == 256);

  BigReal x = dec("3.14159265358979323846264338327950288419716939937510582097");
  CHECK(close_abs(x, ctx.pi(), "-57"));
  CHECK(BigReal::from_string(x.str(60), 256) == x);  // round trip at 60 digits

  CHECK(ctx.real(0L).is_zero());
  CHECK_THROWS_AS(PrecisionContext(32), std::invalid_argument);
}

TEST_CASE("principal square root convention") {
  BigComplex r = principal_sqrt(ctx.real(4.0));
  CHECK(r.real() == ctx.real(2.0));
  CHECK(r.imag().is_zero());

  r = principal_sqrt(ctx.real(-4.0));
  CHECK(r.real().is_zero());
  CHECK(r.imag() == ctx.real(2.0));
  CHECK(r.imag().sign() > 0);

  r = principal_sqrt(ctx.zero());
  CHECK(r.is_zero());

  // sqrt(x)^2 == x for either sign
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-100.0, 100.0);
  for (int i = 0; i < 200; ++i) {
    BigReal x = ctx.real(dist(rng));
    BigComplex sq = principal_sqrt(x);
    BigComplex back = sq * sq;
    CHECK(close_abs(back.real(), x, "-70"));
    CHECK(back.imag().is_zero());
  }
}

TEST_CASE("dilog special values") {
  const BigReal pi = ctx.pi();
  const BigReal tol = tvtest::pow10("-60");

  CHECK(dilog(ctx.complex(0, 0), ctx).is_zero());

  BigComplex li1 = dilog(ctx.complex(1, 0), ctx);
  CHECK(abs(li1.real() - pi * pi / 6) <= tol);
  CHECK(li1.imag().is_zero());

  BigComplex lim1 = dilog(ctx.complex(-1, 0), ctx);
  CHECK(abs(lim1.real() + pi * pi / 12) <= tol);

  BigComplex lih = dilog(ctx.real(1L) / 2, ctx);
  BigReal ln2 = log(ctx.real(2L));
  CHECK(abs(lih.real() - (pi * pi / 12 - ln2 * ln2 / 2)) <= tol);
  CHECK(lih.imag().is_zero());
}

TEST_CASE("dilog reference points") {
  struct Case {
    double re, im;
    const char* want_re;
    const char* want_im;
  };
  const Case cases[] = {
      {0, 1, "-0.2056167583560283045590518958307531486523687376508498047169447786712509",
       "0.915965594177219015054603514932384110774149374281672134266498119621763"},
      {-0.75, 0.3, "-0.653162921831328364358676867885636581025241364495889144246516",
       "0.223019032361364424469414735906116766670388439149893696821321"},
      {3, 4, "-0.604807012061199983491906450236176216448200445897517576398646",
       "3.73361953229438588558071092446444648518389952855752560023404"},
      {0.97, 0.05, "1.4794970737039514111033186218615373453523786791662235365249",
       "0.167097866855885507698542083040846052941420309926217087933013"},
      {-2.5, 0, "-1.69889584199501417304809128401530309625525658015158231242326", "0"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.re);
    CAPTURE(c.im);
    BigComplex got = dilog(ctx.complex(c.re, c.im), ctx);
    CHECK(close_abs(got.real(), dec(c.want_re), "-55"));
    CHECK(close_abs(got.imag(), dec(c.want_im), "-55"));
  }

  // the unit-circle point where |z| = |1-z| = |1/z| = 1
  BigReal theta = ctx.pi() / 3;
  BigComplex z6 = exp_i(theta);
  BigComplex got = dilog(z6, ctx);
  CHECK(close_abs(got.real(), dec("0.274155677808037739412069194441004198203158316867799739622593"), "-55"));
  CHECK(close_abs(got.imag(), dec("1.01494160640965362502120255427452028594168930753029979201749"), "-55"));
}

TEST_CASE("dilog branch cut handling") {
  // interior of the cut: real and beyond the tolerance band
  CHECK_THROWS_AS(dilog(ctx.complex(1.5, 0), ctx), std::domain_error);
  CHECK_THROWS_AS(dilog(ctx.complex(1.0000001, 0), ctx), std::domain_error);

  // the branch point itself and its tolerance band give the limit pi^2/6
  BigReal just_above = ctx.real(1L) + tvtest::pow10("-70");
  BigComplex lim = dilog(BigComplex(just_above, ctx.zero()), ctx);
  CHECK(close_abs(lim.real(), ctx.pi() * ctx.pi() / 6, "-60"));

  // grazing the cut with a genuinely complex argument stays well-defined
  BigReal eps(256);
  mpfr_set_ui_2exp(eps.raw(), 1, -200, MPFR_RNDN);
  BigComplex near_cut = dilog(BigComplex(ctx.real(1L), eps), ctx);
  CHECK(close_abs(near_cut.real(), dec("1.64493406684822643647241516664602518921894990120679843773556"), "-55"));
  CHECK(close_abs(near_cut.imag(), dec("8.68916114164044145938626778286836162754506369660234234033792e-59"), "-70"));
}

TEST_CASE("dilog inversion identity on the negative axis") {
  // Li2(z) + Li2(1/z) = -pi^2/6 - ln(-z)^2/2 for real z < -1
  const BigReal bound = tvtest::pow10("-71");  // 1e-(0.28 * 256)
  const BigReal pi = ctx.pi();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> mag(0.01, 6.0);
  for (int i = 0; i < 100; ++i) {
    BigReal z = -exp(ctx.real(mag(rng)));  // z in (-e^6, -1)
    BigComplex lhs = dilog(BigComplex(z, ctx.zero()), ctx) +
                     dilog(BigComplex(ctx.real(1L) / z, ctx.zero()), ctx);
    BigReal ln = log(-z);
    BigReal rhs = -(pi * pi / 6) - ln * ln / 2;
    CHECK(abs(lhs.real() - rhs) <= bound);
    CHECK(lhs.imag().is_zero());
  }
}

namespace {

// Composite Simpson quadrature of -ln(1-t)/t over [0, x]; independent
// of the series evaluation inside dilog.
BigReal dilog_quadrature(double x, const PrecisionContext& qctx, int panels) {
  auto f = [&](const BigReal& t) -> BigReal {
    if (t.is_zero()) return qctx.real(1L);
    return -log(qctx.real(1L) - t) / t;
  };
  BigReal h = qctx.real(x) / (2L * panels);
  BigReal acc = f(qctx.zero()) + f(qctx.real(x));
  for (long k = 1; k < 2L * panels; ++k) {
    BigReal t = h * k;
    acc += f(t) * ((k % 2 == 0) ? 2L : 4L);
  }
  return acc * h / 3L;
}

}  // namespace

TEST_CASE("dilog matches quadrature on (-1, 1)") {
  const PrecisionContext qctx(128);
  const BigReal tol = tvtest::pow10("-12", 128);
  for (double x : {-0.95, -0.7, -0.4, -0.1, 0.07, 0.3, 0.55, 0.8, 0.9}) {
    CAPTURE(x);
    BigReal got = dilog(BigComplex(qctx.real(x), qctx.zero()), qctx).real();
    BigReal ref = dilog_quadrature(x, qctx, 4096);
    CHECK(abs(got - ref) <= tol);
  }
}

TEST_CASE("dilog conjugation symmetry off the cut") {
  for (auto [re, im] : {std::pair{0.3, 0.8}, {-1.7, 2.2}, {0.9, 0.1}}) {
    BigComplex z = ctx.complex(re, im);
    BigComplex a = dilog(conj(z), ctx);
    BigComplex b = conj(dilog(z, ctx));
    CHECK(close_abs(a, b, "-70"));
  }
}

TEST_CASE("complex log conventions") {
  BigComplex minus_one = ctx.complex(-1, 0);
  CHECK(close_abs(log_principal(minus_one).imag(), ctx.pi(), "-70"));
  CHECK(close_abs(arg_in_2pi(minus_one), ctx.pi(), "-70"));

  BigComplex below = ctx.complex(1, -1);
  CHECK(arg_in_2pi(below) > ctx.pi());  // [0, 2pi) wraps the lower half plane
  CHECK(log_principal(below).imag().sign() < 0);

  CHECK_THROWS_AS(log_principal(ctx.complex(0, 0)), std::domain_error);
}
