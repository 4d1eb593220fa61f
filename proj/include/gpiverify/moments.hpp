#pragma once

// Moments of centered Gaussian pairs and triples.
//
// The exact path covers integer exponents through the hypergeometric moment
// formulas, with an independent Stein-recursion oracle. The float path covers
// real exponents for unit variances, plus a seeded Monte Carlo estimator.

#include <cstdint>
#include <string_view>

#include "gpiverify/exactnum.hpp"

namespace gpiv {

/// Law of a centered Gaussian pair (X2, X3).
class GaussianPair {
public:
  /// Throws std::invalid_argument unless var2 > 0, var3 > 0 and
  /// cov^2 <= var2 * var3.
  GaussianPair(BigRational var2, BigRational var3, BigRational cov);
  static GaussianPair unit(const BigRational& correlation) { return {1, 1, correlation}; }

  const BigRational& var2() const { return var2_; }
  const BigRational& var3() const { return var3_; }
  const BigRational& cov() const { return cov_; }
  /// Squared correlation cov^2 / (var2 var3), always rational.
  BigRational corr_squared() const { return cov_ * cov_ / (var2_ * var3_); }

private:
  BigRational var2_, var3_, cov_;
};

/// (X1, X2, X3) with X1 = X2 + a X3 and unit-variance (X2, X3).
struct TripleSpec {
  GaussianPair pair;
  BigRational a;
  TripleSpec(GaussianPair p, BigRational a_);
};

/// E[X2^(2 m2) X3^(2 m3)].
BigRational even_moment(long m2, long m3, const GaussianPair& pair);
/// E[X2^(2 m2 + 1) X3^(2 m3 + 1)], in the form
/// (2m2+1)!! (2m3+1)!! var2^m2 var3^m3 cov F(-m2, -m3; 3/2; corr^2).
BigRational odd_moment(long m2, long m3, const GaussianPair& pair);
/// E[X2^p X3^q] from M(p,q) = (p-1) var2 M(p-2,q) + q cov M(p-1,q-1) and
/// M(0,q) = (q-1) var3 M(0,q-2). Memoized per call.
BigRational wick_moment(long p, long q, const GaussianPair& pair);
/// E[X1^2 X2^(2 m2) X3^(2 m3)].
BigRational triple_even_moment(const TripleSpec& spec, long m2, long m3);

// ---------------------------------------------------------------------------
// Real exponents, unit variances, correlation x with |x| < 1.

/// Truncation tolerance of the float hypergeometric series.
inline constexpr double kSeriesTolerance = 1e-12;
/// Largest |x| accepted by the float path.
inline constexpr double kMaxRealCorrelation = 0.999;

struct SeriesValue {
  double value = 0;
  /// Bound on the absolute truncation error.
  double remainder_bound = 0;
  int terms = 0;
};

/// F(a, b; c; z) for a, b <= 0, c > 0 and 0 <= z < 1, summed until the tail
/// bound drops below kSeriesTolerance. Terminates exactly when a or b is a
/// nonpositive integer.
SeriesValue hyp_series_real(double a, double b, double c, double z);

/// E[|X|^y] for a standard normal X.
double abs_moment_real(double y);

enum class MixedKind {
  plain,        // E[|X2|^y2 |X3|^y3]
  even_shift2,  // E[|X2|^y2 |X3|^(y3+2)]
  odd_signed,   // E[|X2|^y2 X2 |X3|^y3 X3]
};
std::string_view to_string(MixedKind k);

/// Throws std::domain_error when |x| > kMaxRealCorrelation.
double mixed_abs_moment_real(MixedKind kind, double y2, double y3, double x);

/// Per-coordinate factor |X|^p, times sign(X) when `signed_` is set.
struct McExponents {
  double p2 = 0;
  double p3 = 0;
  bool signed2 = false;
  bool signed3 = false;
};

struct McResult {
  double mean = 0;
  double stderr_ = 0;
  std::uint64_t n = 0;
};

/// Name of the generator recorded in reports.
inline constexpr std::string_view kMcGenerator = "mt19937_64 + Box-Muller";

/// Sample mean and standard error of the product moment over n draws of the
/// pair with the given variances and covariance. Deterministic in (n, seed).
McResult mc_moment(const McExponents& e, double var2, double var3, double cov, std::uint64_t n, std::uint64_t seed);

}  // namespace gpiv
