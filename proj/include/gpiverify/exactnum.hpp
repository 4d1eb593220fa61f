#pragma once

// Exact rational scalars and rational interval arithmetic.
//
// BigRational is a thin value type over GMP's mpq_class. It is always kept in
// canonical form (positive denominator, coprime numerator/denominator), so
// equality is structural. RationalInterval carries closed enclosures
// [lo, hi] with rational endpoints; every operation returns an interval that
// contains the exact image of its inputs.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gpiv {

using BigInt = mpz_class;

class BigRational {
public:
  BigRational() = default;
  BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
  explicit BigRational(const BigInt& v) : q_(v) {}
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p/q", "p", or an exact decimal such as "2.75" or "-0.125".
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }
  std::string str() const { return q_.get_str(); }

  BigRational operator-() const { return BigRational(mpq_class(-q_)); }
  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r);

private:
  mpq_class q_;
};

/// a^e for machine-integer e; negative e requires a != 0.
BigRational pow(const BigRational& a, long e);
BigRational abs(const BigRational& a);
BigRational min(const BigRational& a, const BigRational& b);
BigRational max(const BigRational& a, const BigRational& b);

/// Exact square root when q is the square of a rational, otherwise false.
bool exact_sqrt(const BigRational& q, BigRational& root);

BigInt factorial(unsigned n);
/// (2n-1)!! with the convention (-1)!! = 1; valid for n >= 0.
BigInt double_factorial_odd(long n);

enum class Sign { positive, negative, zero, indeterminate };
std::string_view to_string(Sign s);

class RationalInterval {
public:
  RationalInterval() = default;
  RationalInterval(BigRational point);  // NOLINT(google-explicit-constructor)
  RationalInterval(BigRational lo, BigRational hi);

  const BigRational& lo() const { return lo_; }
  const BigRational& hi() const { return hi_; }
  BigRational width() const { return hi_ - lo_; }
  BigRational midpoint() const { return (lo_ + hi_) / BigRational(2); }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const BigRational& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const RationalInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return contains(BigRational(0)); }

  /// positive/negative only when the interval is strictly on one side of 0;
  /// an endpoint touching 0 is indeterminate unless both endpoints are 0.
  Sign sign() const;

  RationalInterval operator-() const { return {-hi_, -lo_}; }
  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
  /// Throws std::domain_error when b contains 0.
  friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;

  std::string str() const;

private:
  BigRational lo_;
  BigRational hi_;
};

RationalInterval square(const RationalInterval& a);
RationalInterval hull(const RationalInterval& a, const RationalInterval& b);

/// Enclosure [lo, hi] of sqrt(q) with lo^2 <= q <= hi^2, lo >= 0 and
/// hi - lo <= width_bound. Perfect squares return a point interval.
/// Endpoints live on a power-of-two grid, so tightening width_bound yields
/// nested enclosures.
RationalInterval sqrt_enclosure(const BigRational& q, const BigRational& width_bound);

/// Enclosure of sqrt over a nonnegative interval.
RationalInterval sqrt_enclosure(const RationalInterval& q, const BigRational& width_bound);

/// p + q sqrt(d) with rational p, q and d >= 0. Arithmetic between two surds
/// requires the same radicand. Signs are decided exactly.
class Surd {
public:
  Surd(BigRational p, BigRational q, BigRational d);
  static Surd rational(const BigRational& p, const BigRational& d) { return {p, BigRational(0), d}; }

  const BigRational& p() const { return p_; }
  const BigRational& q() const { return q_; }
  const BigRational& radicand() const { return d_; }

  /// Never indeterminate.
  Sign sign() const;
  RationalInterval enclose(const BigRational& width_bound) const;

  Surd operator-() const { return {-p_, -q_, d_}; }
  friend Surd operator+(const Surd& a, const Surd& b);
  friend Surd operator-(const Surd& a, const Surd& b);
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator*(const BigRational& k, const Surd& a) { return {k * a.p_, k * a.q_, a.d_}; }
  friend Surd operator+(const Surd& a, const BigRational& k) { return {a.p_ + k, a.q_, a.d_}; }
  friend Surd operator-(const Surd& a, const BigRational& k) { return {a.p_ - k, a.q_, a.d_}; }
  friend Surd operator/(const Surd& a, const BigRational& k) { return {a.p_ / k, a.q_ / k, a.d_}; }

private:
  BigRational p_, q_, d_;
};

}  // namespace gpiv
