#include "gpiverify/exactnum.hpp"

#include <cctype>
#include <ostream>

namespace gpiv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_int(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed rational literal: '" + std::string(whole) + "'");
  BigInt v(std::string(s), 10);
  return neg ? BigInt(-v) : v;
}

}  // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

BigRational BigRational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    return BigRational(num, BigInt(std::string(den_text), 10));
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    bool neg = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      neg = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      throw std::invalid_argument("malformed decimal literal: '" + std::string(text) + "'");
    std::string digits = std::string(int_part) + std::string(frac_part);
    BigInt num(digits.empty() ? std::string("0") : digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    return BigRational(neg ? BigInt(-num) : num, den);
  }
  return BigRational(parse_int(s, text));
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

BigRational pow(const BigRational& a, long e) {
  if (e < 0) {
    if (a.is_zero()) throw std::domain_error("zero raised to a negative power");
    return pow(BigRational(1) / a, -e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), a.numerator().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), a.denominator().get_mpz_t(), static_cast<unsigned long>(e));
  return BigRational(num, den);
}

BigRational abs(const BigRational& a) { return a.sign() < 0 ? -a : a; }
BigRational min(const BigRational& a, const BigRational& b) { return b < a ? b : a; }
BigRational max(const BigRational& a, const BigRational& b) { return a < b ? b : a; }

bool exact_sqrt(const BigRational& q, BigRational& root) {
  if (q.sign() < 0) return false;
  const BigInt n = q.numerator(), d = q.denominator();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = BigRational(rn, rd);
  return true;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt double_factorial_odd(long n) {
  if (n < 0) throw std::invalid_argument("double_factorial_odd: n must be >= 0");
  BigInt r = 1;
  for (long k = 1; k <= 2 * n - 1; k += 2) r *= k;
  return r;
}

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::positive: return "positive";
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

RationalInterval::RationalInterval(BigRational point) : lo_(point), hi_(std::move(point)) {}

RationalInterval::RationalInterval(BigRational lo, BigRational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("interval with lo > hi");
}

Sign RationalInterval::sign() const {
  if (lo_.is_zero() && hi_.is_zero()) return Sign::zero;
  if (lo_.sign() > 0) return Sign::positive;
  if (hi_.sign() < 0) return Sign::negative;
  return Sign::indeterminate;
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  if (a.is_point() && b.is_point()) return RationalInterval(a.lo_ * b.lo_);
  BigRational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  BigRational lo = p[0], hi = p[0];
  for (const auto& v : p) {
    lo = min(lo, v);
    hi = max(hi, v);
  }
  return {lo, hi};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing 0");
  return a * RationalInterval(BigRational(1) / b.hi_, BigRational(1) / b.lo_);
}

std::string RationalInterval::str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

RationalInterval square(const RationalInterval& a) {
  if (a.lo().sign() >= 0) return {a.lo() * a.lo(), a.hi() * a.hi()};
  if (a.hi().sign() <= 0) return {a.hi() * a.hi(), a.lo() * a.lo()};
  return {BigRational(0), max(a.lo() * a.lo(), a.hi() * a.hi())};
}

RationalInterval hull(const RationalInterval& a, const RationalInterval& b) {
  return {min(a.lo(), b.lo()), max(a.hi(), b.hi())};
}

RationalInterval sqrt_enclosure(const BigRational& q, const BigRational& width_bound) {
  if (q.sign() < 0) throw std::domain_error("sqrt_enclosure of a negative number");
  if (width_bound.sign() <= 0) throw std::invalid_argument("sqrt_enclosure: width bound must be positive");
  BigRational root;
  if (exact_sqrt(q, root)) return RationalInterval(root);

  // Smallest N = 2^k with 1/N <= width_bound.
  BigInt scale = 1;
  while (BigRational(1) / BigRational(scale) > width_bound) scale *= 2;

  // s = floor(sqrt(q * N^2)) = isqrt(floor(num * N^2 / den)).
  BigInt scaled = q.numerator() * scale * scale;
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), q.denominator().get_mpz_t());
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  return {BigRational(s, scale), BigRational(BigInt(s + 1), scale)};
}

RationalInterval sqrt_enclosure(const RationalInterval& q, const BigRational& width_bound) {
  if (q.lo().sign() < 0) throw std::domain_error("sqrt_enclosure of an interval reaching below 0");
  if (q.is_point()) return sqrt_enclosure(q.lo(), width_bound);
  return {sqrt_enclosure(q.lo(), width_bound).lo(), sqrt_enclosure(q.hi(), width_bound).hi()};
}

Surd::Surd(BigRational p, BigRational q, BigRational d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (d_.sign() < 0) throw std::domain_error("surd with a negative radicand");
}

namespace {

void require_same_radicand(const Surd& a, const Surd& b) {
  if (a.radicand() != b.radicand()) throw std::invalid_argument("surds with different radicands");
}

Sign sign_of_int(int s) { return s > 0 ? Sign::positive : (s < 0 ? Sign::negative : Sign::zero); }

}  // namespace

Sign Surd::sign() const {
  const int sp = p_.sign();
  const int sq = d_.is_zero() ? 0 : q_.sign();
  if (sq == 0) return sign_of_int(sp);
  if (sp == 0 || sp == sq) return sign_of_int(sq);
  // Opposite signs: the larger magnitude wins.
  const BigRational pp = p_ * p_, qq = q_ * q_ * d_;
  if (pp > qq) return sign_of_int(sp);
  if (pp < qq) return sign_of_int(sq);
  return Sign::zero;
}

RationalInterval Surd::enclose(const BigRational& width_bound) const {
  if (q_.is_zero()) return RationalInterval(p_);
  const BigRational w = width_bound / abs(q_);
  return RationalInterval(p_) + RationalInterval(q_) * sqrt_enclosure(d_, w);
}

Surd operator+(const Surd& a, const Surd& b) {
  require_same_radicand(a, b);
  return {a.p_ + b.p_, a.q_ + b.q_, a.d_};
}

Surd operator-(const Surd& a, const Surd& b) {
  require_same_radicand(a, b);
  return {a.p_ - b.p_, a.q_ - b.q_, a.d_};
}

Surd operator*(const Surd& a, const Surd& b) {
  require_same_radicand(a, b);
  return {a.p_ * b.p_ + a.q_ * b.q_ * a.d_, a.p_ * b.q_ + a.q_ * b.p_, a.d_};
}

}  // namespace gpiv
