#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gpiverify/gausshyp.hpp"
#include "gpiverify/moments.hpp"

using namespace gpiv;

namespace {

BigRational R(const char* s) { return BigRational::parse(s); }

std::vector<BigRational> correlations() {
  std::vector<BigRational> xs;
  for (int k = -10; k <= 10; ++k) xs.emplace_back(BigRational(k, 10));
  for (long d : {3L, 7L}) {
    xs.emplace_back(BigRational(1, d));
    xs.emplace_back(BigRational(-1, d));
  }
  return xs;
}

}  // namespace

TEST_CASE("pair validation") {
  CHECK_THROWS(GaussianPair(BigRational(0), BigRational(1), BigRational(0)));
  CHECK_THROWS(GaussianPair(BigRational(1), BigRational(-1), BigRational(0)));
  CHECK_THROWS(GaussianPair(BigRational(1), BigRational(1), R("11/10")));
  CHECK_NOTHROW(GaussianPair(BigRational(1), BigRational(4), BigRational(2)));
  CHECK_THROWS(TripleSpec(GaussianPair(BigRational(2), BigRational(1), BigRational(0)), BigRational(1)));
}

TEST_CASE("even moment examples") {
  const auto half = GaussianPair::unit(R("1/2"));
  CHECK(even_moment(1, 1, half) == R("3/2"));
  CHECK(even_moment(1, 2, half) == BigRational(6));
  const GaussianPair ind(R("2"), R("3"), BigRational(0));
  for (long m2 = 0; m2 <= 5; ++m2)
    for (long m3 = 0; m3 <= 5; ++m3)
      CHECK(even_moment(m2, m3, ind) ==
            BigRational(BigInt(double_factorial_odd(m2) * double_factorial_odd(m3))) * pow(BigRational(2), m2) * pow(BigRational(3), m3));
}

TEST_CASE("odd moment examples") {
  const auto half = GaussianPair::unit(R("1/2"));
  CHECK(odd_moment(1, 1, half) == R("21/4"));
  CHECK(odd_moment(2, 3, GaussianPair::unit(BigRational(0))).is_zero());
  const GaussianPair p(R("2"), R("5"), R("-3/2"));
  CHECK(odd_moment(0, 0, p) == R("-3/2"));
}

TEST_CASE("wick examples") {
  const auto half = GaussianPair::unit(R("1/2"));
  CHECK(wick_moment(2, 2, half) == R("3/2"));
  CHECK(wick_moment(3, 3, half) == R("21/4"));
  CHECK(wick_moment(1, 0, half).is_zero());
  for (long p = 0; p <= 9; ++p)
    for (long q = 0; q <= 9; ++q)
      if ((p + q) % 2 == 1) CHECK(wick_moment(p, q, half).is_zero());
}

TEST_CASE("exact formulas agree with the wick recursion") {
  for (const auto& x : correlations())
    for (long m2 = 0; m2 <= 8; ++m2)
      for (long m3 = 0; m3 <= 8; ++m3) {
        const auto pair = GaussianPair::unit(x);
        CHECK(even_moment(m2, m3, pair) == wick_moment(2 * m2, 2 * m3, pair));
        CHECK(odd_moment(m2, m3, pair) == wick_moment(2 * m2 + 1, 2 * m3 + 1, pair));
      }
  const GaussianPair general(R("3/2"), R("7/3"), R("-4/5"));
  for (long m2 = 0; m2 <= 6; ++m2)
    for (long m3 = 0; m3 <= 6; ++m3) {
      CHECK(even_moment(m2, m3, general) == wick_moment(2 * m2, 2 * m3, general));
      CHECK(odd_moment(m2, m3, general) == wick_moment(2 * m2 + 1, 2 * m3 + 1, general));
    }
}

TEST_CASE("scaling covariance and signs") {
  const GaussianPair base(R("3/2"), R("2/3"), R("1/2"));
  const BigRational s = R("3/2"), t = R("2/5");
  const GaussianPair scaled(s * s * base.var2(), t * t * base.var3(), s * t * base.cov());
  for (long m2 = 0; m2 <= 5; ++m2)
    for (long m3 = 0; m3 <= 5; ++m3) {
      CHECK(even_moment(m2, m3, scaled) == pow(s, 2 * m2) * pow(t, 2 * m3) * even_moment(m2, m3, base));
      CHECK(even_moment(m2, m3, base).sign() > 0);
    }
  for (const auto& x : correlations())
    for (long m = 0; m <= 4; ++m) CHECK(odd_moment(m, m + 1, GaussianPair::unit(x)).sign() == x.sign());
}

TEST_CASE("triple moment") {
  const TripleSpec spec(GaussianPair::unit(R("1/2")), BigRational(-1));
  CHECK(triple_even_moment(spec, 1, 1) == R("3/2"));
  for (long m2 = 0; m2 <= 4; ++m2)
    for (long m3 = 0; m3 <= 4; ++m3) {
      const auto pair = GaussianPair::unit(R("2/7"));
      CHECK(triple_even_moment(TripleSpec(pair, BigRational(0)), m2, m3) == even_moment(m2 + 1, m3, pair));
      const BigRational a = R("-3/4");
      const auto ind = GaussianPair::unit(BigRational(0));
      CHECK(triple_even_moment(TripleSpec(ind, a), m2, m3) ==
            (a * a * BigRational(2 * m3 + 1) + BigRational(2 * m2 + 1)) *
                BigRational(BigInt(double_factorial_odd(m2) * double_factorial_odd(m3))));
      // Direct expansion of (X2 + a X3)^2 through the recursion.
      const BigRational b = R("5/3");
      CHECK(triple_even_moment(TripleSpec(pair, b), m2, m3) ==
            wick_moment(2 * m2 + 2, 2 * m3, pair) + b * b * wick_moment(2 * m2, 2 * m3 + 2, pair) +
                2 * b * wick_moment(2 * m2 + 1, 2 * m3 + 1, pair));
    }
}

TEST_CASE("moment ratio remark holds on grids") {
  for (long m2 = 1; m2 <= 6; ++m2)
    for (long m3 = m2; m3 <= 6; ++m3)
      for (int k = 1; k <= 19; ++k) {
        const BigRational x(k - 10 == 0 ? 1 : k - 10, 10);
        const auto pair = GaussianPair::unit(x);
        const BigRational prod = BigRational(BigInt(double_factorial_odd(m2) * double_factorial_odd(m3)));
        const BigRational lhs = pow(odd_moment(m2, m3, pair) - prod * x, 2);
        const BigRational rhs = (even_moment(m2 + 1, m3, pair) - prod) * (even_moment(m2, m3 + 1, pair) - prod);
        CHECK(lhs < rhs);
      }
}

TEST_CASE("real absolute moments") {
  CHECK(abs_moment_real(2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(abs_moment_real(1) == doctest::Approx(std::sqrt(2 / M_PI)).epsilon(1e-14));
  CHECK(abs_moment_real(4) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(abs_moment_real(0) == doctest::Approx(1.0));
}

TEST_CASE("real mixed moments reduce to exact integer moments") {
  for (int m2 = 0; m2 <= 3; ++m2)
    for (int m3 = 0; m3 <= 3; ++m3)
      for (int k = -9; k <= 9; k += 3) {
        const BigRational x(k, 10);
        const auto pair = GaussianPair::unit(x);
        const double xd = x.to_double();
        CHECK(mixed_abs_moment_real(MixedKind::plain, 2 * m2, 2 * m3, xd) ==
              doctest::Approx(even_moment(m2, m3, pair).to_double()).epsilon(1e-10));
        CHECK(mixed_abs_moment_real(MixedKind::even_shift2, 2 * m2, 2 * m3, xd) ==
              doctest::Approx(even_moment(m2, m3 + 1, pair).to_double()).epsilon(1e-10));
        CHECK(mixed_abs_moment_real(MixedKind::odd_signed, 2 * m2, 2 * m3, xd) ==
              doctest::Approx(odd_moment(m2, m3, pair).to_double()).epsilon(1e-10).scale(1));
      }
  CHECK_THROWS(mixed_abs_moment_real(MixedKind::plain, 1, 1, 1.0));
}

TEST_CASE("real series carries a remainder bound") {
  const SeriesValue s = hyp_series_real(-0.5, -0.5, 0.5, 0.81);
  CHECK(s.remainder_bound < 1e-12);
  CHECK(s.terms > 0);
  const SeriesValue poly = hyp_series_real(-2, -3, 0.5, 0.25);
  CHECK(poly.value == doctest::Approx(poly_eval(hyp_poly({2, 3, BigRational(1, 2)}), "z", R("1/4")).to_double()));
  CHECK(poly.remainder_bound == 0);
}

TEST_CASE("monte carlo examples and determinism") {
  const McResult v = mc_moment({2, 0, false, false}, 1, 1, 0, 1000000, 1);
  CHECK(std::abs(v.mean - 1.0) <= 3 * v.stderr_);
  const McResult w = mc_moment({2, 2, false, false}, 1, 1, 0.5, 1000000, 1);
  CHECK(std::abs(w.mean - 1.5) <= 4 * w.stderr_);
  const McResult c = mc_moment({1, 1, true, true}, 1, 1, 0.3, 1000000, 2);
  CHECK(std::abs(c.mean - 0.3) <= 4 * c.stderr_);
  const McResult again = mc_moment({2, 2, false, false}, 1, 1, 0.5, 1000000, 1);
  CHECK(again.mean == w.mean);
  CHECK(again.stderr_ == w.stderr_);
  CHECK(mc_moment({2, 2, false, false}, 1, 1, 0.5, 1000, 7).mean != mc_moment({2, 2, false, false}, 1, 1, 0.5, 1000, 8).mean);
  CHECK_THROWS(mc_moment({2, 0, false, false}, 1, 1, 0, 0, 1));
}

TEST_CASE("monte carlo brackets the odd signed series at x=1/2") {
  const double exact = mixed_abs_moment_real(MixedKind::odd_signed, 1, 1, 0.5);
  const McResult r = mc_moment({2, 2, true, true}, 1, 1, 0.5, 10000000, 12345);
  CHECK(std::abs(r.mean - exact) <= 3 * r.stderr_);
}
