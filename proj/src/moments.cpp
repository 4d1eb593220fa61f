#include "gpiverify/moments.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

#include "gpiverify/gausshyp.hpp"
#include "gpiverify/polyring.hpp"

namespace gpiv {

GaussianPair::GaussianPair(BigRational var2, BigRational var3, BigRational cov)
    : var2_(std::move(var2)), var3_(std::move(var3)), cov_(std::move(cov)) {
  if (var2_.sign() <= 0 || var3_.sign() <= 0) throw std::invalid_argument("variances must be positive");
  if (cov_ * cov_ > var2_ * var3_) throw std::invalid_argument("covariance exceeds sqrt(var2 var3)");
}

TripleSpec::TripleSpec(GaussianPair p, BigRational a_) : pair(std::move(p)), a(std::move(a_)) {
  if (pair.var2() != BigRational(1) || pair.var3() != BigRational(1))
    throw std::invalid_argument("TripleSpec needs unit variances");
}

namespace {

void require_nonneg(long m2, long m3) {
  if (m2 < 0 || m3 < 0) throw std::invalid_argument("moment exponents must be >= 0");
}

}  // namespace

BigRational even_moment(long m2, long m3, const GaussianPair& pair) {
  require_nonneg(m2, m3);
  const BigRational f = poly_eval(hyp_poly({m2, m3, BigRational(1, 2)}), "z", pair.corr_squared());
  return BigRational(BigInt(double_factorial_odd(m2) * double_factorial_odd(m3))) * pow(pair.var2(), m2) *
         pow(pair.var3(), m3) * f;
}

BigRational odd_moment(long m2, long m3, const GaussianPair& pair) {
  require_nonneg(m2, m3);
  const BigRational f = poly_eval(hyp_poly({m2, m3, BigRational(3, 2)}), "z", pair.corr_squared());
  return BigRational(BigInt(double_factorial_odd(m2 + 1) * double_factorial_odd(m3 + 1))) * pow(pair.var2(), m2) *
         pow(pair.var3(), m3) * pair.cov() * f;
}

namespace {

BigRational wick_rec(long p, long q, const GaussianPair& pair, std::map<std::pair<long, long>, BigRational>& memo) {
  if (p < 0 || q < 0 || (p + q) % 2 != 0) return BigRational(0);
  if (p == 0 && q == 0) return BigRational(1);
  const auto key = std::make_pair(p, q);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigRational v;
  if (p == 0) {
    v = BigRational(q - 1) * pair.var3() * wick_rec(0, q - 2, pair, memo);
  } else {
    v = BigRational(p - 1) * pair.var2() * wick_rec(p - 2, q, pair, memo);
    if (q > 0) v += BigRational(q) * pair.cov() * wick_rec(p - 1, q - 1, pair, memo);
  }
  memo.emplace(key, v);
  return v;
}

}  // namespace

BigRational wick_moment(long p, long q, const GaussianPair& pair) {
  if (p < 0 || q < 0) throw std::invalid_argument("moment exponents must be >= 0");
  std::map<std::pair<long, long>, BigRational> memo;
  return wick_rec(p, q, pair, memo);
}

BigRational triple_even_moment(const TripleSpec& spec, long m2, long m3) {
  require_nonneg(m2, m3);
  const auto& a = spec.a;
  return a * a * even_moment(m2, m3 + 1, spec.pair) + even_moment(m2 + 1, m3, spec.pair) +
         BigRational(2) * a * odd_moment(m2, m3, spec.pair);
}

SeriesValue hyp_series_real(double a, double b, double c, double z) {
  if (a > 0 || b > 0 || c <= 0) throw std::invalid_argument("hyp_series_real needs a, b <= 0 and c > 0");
  if (z < 0 || z >= 1) throw std::domain_error("hyp_series_real needs 0 <= z < 1");
  // Past j0 every factor (a+j)(b+j) / ((c+j)(j+1)) lies in [0, 1], so the
  // terms decrease geometrically with ratio at most z and the tail after
  // term j is bounded by |t_(j+1)| / (1 - z).
  const double j0 = std::max(-a, -b);
  SeriesValue out;
  double term = 1;
  for (int j = 0;; ++j) {
    out.value += term;
    out.terms = j + 1;
    const double next = term * (a + j) * (b + j) / ((c + j) * (j + 1)) * z;
    if (next == 0) {
      out.remainder_bound = 0;
      return out;
    }
    if (j + 1 > j0) {
      const double tail = std::abs(next) / (1 - z);
      if (tail < kSeriesTolerance) {
        out.remainder_bound = tail;
        return out;
      }
    }
    if (j > 1000000) throw std::runtime_error("hyp_series_real did not converge");
    term = next;
  }
}

double abs_moment_real(double y) {
  if (y < 0) throw std::invalid_argument("abs_moment_real needs y >= 0");
  return std::pow(2.0, y / 2) * std::tgamma((y + 1) / 2) / std::sqrt(M_PI);
}

std::string_view to_string(MixedKind k) {
  switch (k) {
    case MixedKind::plain: return "plain";
    case MixedKind::even_shift2: return "even_shift2";
    case MixedKind::odd_signed: return "odd_signed";
  }
  return "plain";
}

double mixed_abs_moment_real(MixedKind kind, double y2, double y3, double x) {
  if (y2 < 0 || y3 < 0) throw std::invalid_argument("exponents must be >= 0");
  if (std::abs(x) > kMaxRealCorrelation)
    throw std::domain_error("the series path needs |x| <= 0.999; |x| = 1 does not converge reliably");
  const double z = x * x;
  const double pref =
      std::pow(2.0, (y2 + y3) / 2) * std::tgamma((y2 + 1) / 2) * std::tgamma((y3 + 1) / 2) / M_PI;
  switch (kind) {
    case MixedKind::plain: return pref * hyp_series_real(-y2 / 2, -y3 / 2, 0.5, z).value;
    case MixedKind::even_shift2: return (y3 + 1) * pref * hyp_series_real(-y3 / 2 - 1, -y2 / 2, 0.5, z).value;
    case MixedKind::odd_signed:
      return x * (y2 + 1) * (y3 + 1) * pref * hyp_series_real(-y2 / 2, -y3 / 2, 1.5, z).value;
  }
  throw std::invalid_argument("unknown MixedKind");
}

McResult mc_moment(const McExponents& e, double var2, double var3, double cov, std::uint64_t n,
                   std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("mc_moment needs n >= 1");
  if (var2 <= 0 || var3 <= 0 || cov * cov > var2 * var3) throw std::invalid_argument("invalid Gaussian pair");
  std::mt19937_64 gen(seed);
  auto uniform = [&gen] {
    // 53 random bits in (0, 1].
    return (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53;
  };
  const double s2 = std::sqrt(var2);
  const double rho = cov / std::sqrt(var2 * var3);
  const double s3 = std::sqrt(var3);
  const double orth = std::sqrt(std::max(0.0, 1 - rho * rho));
  auto factor = [](double v, double p, bool sgn) {
    double f = std::pow(std::abs(v), p);
    return sgn && v < 0 ? -f : f;
  };

  double mean = 0, m2 = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double r = std::sqrt(-2 * std::log(uniform()));
    const double th = 2 * M_PI * uniform();
    const double z1 = r * std::cos(th), z2 = r * std::sin(th);
    const double x2 = s2 * z1;
    const double x3 = s3 * (rho * z1 + orth * z2);
    const double v = factor(x2, e.p2, e.signed2) * factor(x3, e.p3, e.signed3);
    const double delta = v - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (v - mean);
  }
  McResult out;
  out.mean = mean;
  out.n = n;
  out.stderr_ = n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
  return out;
}

}  // namespace gpiv
