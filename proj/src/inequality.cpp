#include "gpiverify/inequality.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gpiverify/gausshyp.hpp"
#include "gpiverify/parallel.hpp"

namespace gpiv {

namespace {

const BigRational kOne(1);
const BigRational kTwo(2);

std::string describe(const GpiParams& p) {
  return "(m2,m3)=(" + std::to_string(p.m2) + "," + std::to_string(p.m3) + ")";
}

nlohmann::json params_json(const GpiParams& p) {
  return {{"m2", p.m2}, {"m3", p.m3}, {"r", p.r.str()}, {"t", p.t.str()}, {"in_S", p.in_S}};
}

BigRational Q_of(const GpiParams& p, const BigRational& z) { return p.r * p.r * z - kOne; }

void require_H_domain(const GpiParams& p, const BigRational& z) {
  if (Q_of(p, z).sign() <= 0) throw std::domain_error("H needs z > 1/r^2, got z = " + z.str());
  if (z > kOne) throw std::domain_error("H needs z <= 1, got z = " + z.str());
}

BigRational F_at(long m2, long m3, const BigRational& c, const BigRational& z) {
  return poly_eval(hyp_series(-m2, -m3, c), "z", z);
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

bool in_S(long m2, long m3) {
  if (m2 == 1) return m3 >= 5;
  if (m2 == 2) return m3 >= 3;
  return m2 >= 3 && m3 >= m2;
}

GpiParams make_params(long m2, long m3) {
  if (m2 < 1 || m3 < 1) throw std::invalid_argument("m2 and m3 must be >= 1");
  GpiParams p;
  p.m2 = m2;
  p.m3 = m3;
  p.r = BigRational((2 * m2 + 1) * (2 * m3 + 1) + 1);
  p.t = kOne / (p.r + (kOne + BigRational(1, 2 * m2)) * (kOne + BigRational(1, 2 * m3)));
  p.in_S = in_S(m2, m3);
  if (!(kOne / (p.r * p.r) < p.t && p.t < kOne / p.r))
    throw std::logic_error("t outside (1/r^2, 1/r) for " + describe(p));
  return p;
}

RealGpiParams make_real_params(double y2, double y3) {
  if (!(y2 > 0) || !(y3 > 0)) throw std::invalid_argument("y2 and y3 must be > 0");
  RealGpiParams rp;
  rp.y2 = y2;
  rp.y3 = y3;
  rp.r = (y2 + 1) * (y3 + 1) + 1;
  rp.t = 1 / (rp.r + (1 + 1 / y2) * (1 + 1 / y3));
  return rp;
}

QuadraticForm make_quadratic_form(const GpiParams& p, const BigRational& z) {
  const BigRational P = p.P();
  QuadraticForm q;
  q.beta = -p.M() * (kOne - p.r * z) / P;
  q.gamma = (kOne - p.r * p.r * z) / P;
  q.leading = kOne - z;
  const BigRational lhs = q.beta * q.beta - q.leading * q.gamma;
  const BigRational s = p.d() * (kOne - p.r * z) / P;
  if (lhs != s * s + P * z) throw std::logic_error("quadratic form identity failed at z = " + z.str());
  return q;
}

BigRational H_radicand(const GpiParams& p, const BigRational& z) {
  const BigRational P = p.P();
  const BigRational e = p.d() * (p.r * z - kOne);
  return e * e + P * P * P * z;
}

Surd H_surd(const GpiParams& p, const BigRational& z) {
  require_H_domain(p, z);
  const BigRational Q = Q_of(p, z);
  return {p.M() * (p.r * z - kOne) / Q, kOne / Q, H_radicand(p, z)};
}

namespace {

// Numerator pieces of H'(z) = [2 M r P sqrt(D) + E] / (2 sqrt(D) Q^2).
BigRational H_derivative_E(const GpiParams& p, const BigRational& z) {
  const BigRational P = p.P(), d = p.d();
  return kTwo * d * d * p.r * P * (p.r * z - kOne) - P * P * P * (kOne + p.r * p.r * z);
}

}  // namespace

Surd H_derivative_surd(const GpiParams& p, const BigRational& z) {
  require_H_domain(p, z);
  const BigRational Q = Q_of(p, z), D = H_radicand(p, z);
  const BigRational Q2 = Q * Q;
  return {p.M() * p.r * p.P() / Q2, H_derivative_E(p, z) / (kTwo * D * Q2), D};
}

RationalInterval H_value(const GpiParams& p, const BigRational& z, const BigRational& width) {
  require_H_domain(p, z);
  const BigRational Q = Q_of(p, z);
  const RationalInterval s = sqrt_enclosure(H_radicand(p, z), width);
  return (RationalInterval(p.M() * (p.r * z - kOne)) + s) / RationalInterval(Q);
}

RationalInterval H_derivative(const GpiParams& p, const BigRational& z, const BigRational& width) {
  require_H_domain(p, z);
  const BigRational Q = Q_of(p, z);
  const RationalInterval s = sqrt_enclosure(H_radicand(p, z), width);
  const RationalInterval num = RationalInterval(kTwo * p.M() * p.r * p.P()) * s + H_derivative_E(p, z);
  return num / (RationalInterval(kTwo * Q * Q) * s);
}

BigRational H_at_one(const GpiParams& p) { return kTwo * p.M() / (kTwo + p.P()); }

Sign compare_H(const GpiParams& p, const BigRational& z, const BigRational& k) { return (H_surd(p, z) - k).sign(); }

std::string_view to_string(LemmaBranch b) { return b == LemmaBranch::half ? "half" : "seventh"; }

CheckReport h_lower_bound_check(const GpiParams& p, const BigRational& z, LemmaBranch which) {
  const BigRational inv_r = kOne / p.r;
  const BigRational k = which == LemmaBranch::half ? BigRational(1, 2) : BigRational(1, 7);
  if (which == LemmaBranch::half) {
    if (!(z > inv_r * inv_r && z <= inv_r)) throw std::domain_error("h_half needs 1/r^2 < z <= 1/r");
  } else {
    if (!(z > inv_r && z <= p.B())) throw std::domain_error("h_seventh needs 1/r < z <= 2.75/(m2 m3)");
  }
  CheckReport rep;
  rep.name = std::string("h_lower_bound.") + std::string(to_string(which));
  const Surd diff = H_surd(p, z) - k;
  const Sign s = diff.sign();
  rep.status = s == Sign::positive ? Status::holds : Status::fails;
  rep.enclosure = diff.enclose(BigRational(1, 1000000000));
  rep.message = "H(z) - " + k.str() + " is " + std::string(to_string(s));
  // z-free sufficient conditions that close the chain for every z in range.
  const BigRational M = p.M();
  const bool sufficient = which == LemmaBranch::half
                              ? BigRational(3) * p.r - BigRational(7) > BigRational(4) * M
                              : BigRational(29, 2) * p.r > BigRational(14) * M + BigRational(48);
  rep.details = {{"params", params_json(p)}, {"z", z.str()}, {"bound", k.str()}, {"sign", to_string(s)},
                 {"z_free_sufficient_condition", sufficient}};
  if (s != Sign::positive) rep.witnesses.push_back({"z=" + z.str(), "H(z)-k " + std::string(to_string(s))});
  return rep;
}

MultiPoly S_poly(const GpiParams& p) {
  const MultiPoly f1 = hyp_poly({p.m2, p.m3, BigRational(1, 2)});
  const MultiPoly f2 = hyp_poly({p.m2, p.m3, BigRational(3, 2)});
  const MultiPoly z = MultiPoly::variable("z");
  const MultiPoly one = MultiPoly::constant(kOne, {"z"});
  const MultiPoly t1 = poly_scale((one - z) * f1 * f1, p.P());
  const MultiPoly t2 = poly_scale((poly_scale(z, p.r) - kOne) * f1 * f2, kTwo * p.M());
  const MultiPoly t3 = (poly_scale(z, p.r * p.r) - kOne) * f2 * f2;
  return t1 + t2 - t3;
}

MultiPoly S_poly_symbolic(long m2) {
  if (m2 < 1) throw std::invalid_argument("m2 must be >= 1");
  const std::vector<std::string> ring{"z", "m3"};
  const MultiPoly f1 = hyp_poly_symbolic_m3(m2, BigRational(1, 2)).with_vars(ring);
  const MultiPoly f2 = hyp_poly_symbolic_m3(m2, BigRational(3, 2)).with_vars(ring);
  const MultiPoly z = MultiPoly::variable("z").with_vars(ring);
  const MultiPoly m3 = MultiPoly::variable("m3").with_vars(ring);
  const MultiPoly one = MultiPoly::constant(kOne, ring);
  const MultiPoly P = poly_scale(poly_scale(m3, kTwo) + kOne, BigRational(2 * m2 + 1));
  const MultiPoly r = P + kOne;
  const MultiPoly M = m3 + BigRational(m2 + 1);
  return P * (one - z) * f1 * f1 + poly_scale(M * (r * z - kOne) * f1 * f2, kTwo) - (r * r * z - kOne) * f2 * f2;
}

MultiPoly h_poly(long m2) {
  if (m2 < 1 || m2 > 7) throw std::invalid_argument("h_poly covers 1 <= m2 <= 7");
  const long offset = m2 == 1 ? 5 : (m2 == 2 ? 3 : m2);
  const MultiPoly b = MultiPoly::variable("b");
  const MultiPoly c = MultiPoly::variable("c");
  const MultiPoly in_b = substitute(S_poly_symbolic(m2), "m3", b * b + BigRational(offset));
  const MultiPoly c2 = c * c;
  const MultiPoly h = substitute_rational(in_b, "z", c2, c2 + kOne, static_cast<unsigned>(2 * m2 + 1));
  return h.with_vars({"b", "c"});
}

MultiPoly f_truncated_poly() {
  const std::vector<std::string> ring{"x2", "x3", "u"};
  const MultiPoly x2 = MultiPoly::variable("x2").with_vars(ring);
  const MultiPoly x3 = MultiPoly::variable("x3").with_vars(ring);
  const MultiPoly u = MultiPoly::variable("u").with_vars(ring);
  const MultiPoly X = x2 * x3;
  const BigRational f17(factorial(17));
  // (x-1)!/(x-j)! is the falling factorial (x-1)^(j-1).
  auto bracket = [&](unsigned shift) {
    MultiPoly acc = poly_scale(poly_pow(X, 3), f17);
    for (unsigned j = 1; j <= 4; ++j) {
      const BigRational k = pow(BigRational(4), j) * f17 / BigRational(factorial(2 * j + shift));
      acc += poly_scale(falling_factorial(x2 - kOne, j - 1) * falling_factorial(x3 - kOne, j - 1) *
                            poly_pow(u, j) * poly_pow(X, 4 - j),
                        k);
    }
    return acc;
  };
  const MultiPoly A = bracket(0), B = bracket(1);
  const MultiPoly P = (poly_scale(x2, kTwo) + kOne) * (poly_scale(x3, kTwo) + kOne);
  const MultiPoly r = P + kOne;
  const MultiPoly M = x2 + x3 + kOne;
  return P * (X - u) * A * A + poly_scale(M * (r * u - X) * A * B, kTwo) - (r * r * u - X) * B * B;
}

MultiPoly g_poly() {
  const MultiPoly a = MultiPoly::variable("a");
  const MultiPoly b = MultiPoly::variable("b");
  const MultiPoly c = MultiPoly::variable("c");
  MultiPoly g = substitute(f_truncated_poly(), "x2", a * a + BigRational(8));
  g = substitute(g, "x3", b * b + BigRational(8));
  const MultiPoly c2 = c * c;
  g = substitute_rational(g, "u", poly_scale(c2, BigRational(11, 4)), c2 + kOne, 9);
  return g.with_vars({"a", "b", "c"});
}

CheckReport check_gpi(const GpiParams& p, const BigRational& a, const BigRational& x) {
  if (abs(x) > kOne) throw std::domain_error("check_gpi needs |x| <= 1");
  const TripleSpec spec(GaussianPair::unit(x), a);
  const BigRational lhs = triple_even_moment(spec, p.m2, p.m3);
  const BigRational ex1 = a * a + kOne + kTwo * a * x;
  const BigRational marg = BigRational(BigInt(double_factorial_odd(p.m2) * double_factorial_odd(p.m3)));
  const BigRational margin = lhs - ex1 * marg;
  CheckReport rep;
  rep.name = "gpi";
  rep.margin = margin;
  rep.status = margin.sign() >= 0 ? Status::holds : Status::fails;
  rep.details = {{"params", params_json(p)},  {"a", a.str()},
                 {"x", x.str()},              {"lhs", lhs.str()},
                 {"rhs", (ex1 * marg).str()}, {"equality", margin.is_zero()}};
  if (rep.status == Status::fails) rep.witnesses.push_back({"a=" + a.str() + ",x=" + x.str(), margin.str()});
  return rep;
}

CheckReport check_mri(const GpiParams& p, const GaussianPair& pair, const BigRational& width) {
  CheckReport rep;
  rep.name = "mri";
  const BigRational z = pair.corr_squared();
  const BigRational abs_cov = abs(pair.cov());
  const BigRational lhs = abs(odd_moment(p.m2, p.m3, pair)) / (p.P() * even_moment(p.m2, p.m3, pair));
  rep.details = {{"params", params_json(p)},
                 {"var2", pair.var2().str()},
                 {"var3", pair.var3().str()},
                 {"cov", pair.cov().str()},
                 {"corr_squared", z.str()},
                 {"lhs", lhs.str()}};
  Sign s;  // sign of bound - lhs
  if (z <= p.t) {
    rep.details["branch"] = "cov";
    const BigRational diff = lhs - abs_cov;
    rep.margin = diff;
    rep.enclosure = RationalInterval(diff);
    s = Surd::rational(-diff, BigRational(0)).sign();
  } else {
    rep.details["branch"] = "H";
    // lhs <= H |cov|  <=>  H - lhs/|cov| >= 0, with |cov| > 0 here.
    s = compare_H(p, z, lhs / abs_cov);
    rep.enclosure = RationalInterval(lhs) - RationalInterval(abs_cov) * H_value(p, z, width);
  }
  rep.details["sign_bound_minus_lhs"] = to_string(s);
  rep.details["equality"] = s == Sign::zero;
  rep.status = s == Sign::negative ? Status::fails : Status::holds;
  if (rep.status == Status::fails) rep.witnesses.push_back({"cov=" + pair.cov().str(), "lhs exceeds bound"});
  return rep;
}

CheckReport find_mri_violation(const GpiParams& p, int grid, const BigRational& width) {
  if (grid < 1) throw std::invalid_argument("grid must be >= 1");
  CheckReport rep;
  rep.name = "mri.find_violation";
  nlohmann::json hits = nlohmann::json::array();
  for (int k = 1; k <= grid; ++k) {
    const BigRational x(k, grid);
    const CheckReport c = check_mri(p, GaussianPair::unit(x), width);
    if (c.status == Status::fails) {
      hits.push_back(x.str());
      if (rep.witnesses.empty()) {
        rep.witnesses.push_back({"x=" + x.str(), "lhs=" + c.details["lhs"].get<std::string>()});
        rep.enclosure = c.enclosure;
      }
    }
  }
  rep.details = {{"params", params_json(p)}, {"grid", grid}, {"violations", hits}};
  if (hits.empty()) {
    rep.status = Status::fails;
    rep.message = "no violation on the grid";
  } else {
    rep.status = Status::verified;
    rep.message = std::to_string(hits.size()) + " violating correlations";
  }
  return rep;
}

CheckReport hfri_check(const GpiParams& p, const BigRational& z) {
  const BigRational inv_r2 = kOne / (p.r * p.r);
  if (!(z > inv_r2 && z < kOne)) throw std::domain_error("hfri_check needs 1/r^2 < z < 1");
  const BigRational s = poly_eval(S_poly(p), "z", z);
  CheckReport rep;
  rep.name = "hfri";
  rep.margin = s;
  rep.status = s.sign() > 0 ? Status::holds : Status::fails;
  rep.details = {{"params", params_json(p)}, {"z", z.str()}, {"in_t_range", z > p.t}};
  if (rep.status == Status::fails) rep.witnesses.push_back({"z=" + z.str(), "S(z)=" + s.str()});
  return rep;
}

RationalInterval hfri_ratio_margin(const GpiParams& p, const BigRational& z, const BigRational& width) {
  const BigRational f1 = F_at(p.m2, p.m3, BigRational(1, 2), z);
  const BigRational f2 = F_at(p.m2, p.m3, BigRational(3, 2), z);
  return RationalInterval(f1 / f2) - RationalInterval(kOne) / H_value(p, z, width);
}

RationalInterval G_value(const GpiParams& p, const BigRational& z, const BigRational& width) {
  const BigRational fa = F_at(p.m2 + 1, p.m3, BigRational(1, 2), z);
  const BigRational f = F_at(p.m2, p.m3, BigRational(1, 2), z);
  const RationalInterval coef =
      RationalInterval(kOne - z) + RationalInterval(BigRational(2 * p.m3 + 1) * z) * H_value(p, z, width);
  return RationalInterval(fa) - coef * RationalInterval(f);
}

Surd G_surd(const GpiParams& p, const BigRational& z) {
  const BigRational fa = F_at(p.m2 + 1, p.m3, BigRational(1, 2), z);
  const BigRational f = F_at(p.m2, p.m3, BigRational(1, 2), z);
  const Surd coef = (BigRational(2 * p.m3 + 1) * z * H_surd(p, z)) + (kOne - z);
  return -(f * coef) + fa;
}

BigRational G_at_one(const GpiParams& p) {
  const BigRational half(1, 2);
  return hyp_value_at_one({p.m2 + 1, p.m3, half}) -
         BigRational(2 * p.m3 + 1) * H_at_one(p) * hyp_value_at_one({p.m2, p.m3, half});
}

RationalInterval aug13v_margin(const GpiParams& p, const BigRational& z, const BigRational& width) {
  const RationalInterval H = H_value(p, z, width);
  const RationalInterval dH = H_derivative(p, z, width);
  return RationalInterval(p.P() * z) * square(H) + RationalInterval(kTwo * z * (kOne - z)) * dH -
         RationalInterval(kOne - z) - RationalInterval(kTwo * p.M() * z - kOne) * H;
}

Surd aug13v_surd(const GpiParams& p, const BigRational& z) {
  const Surd H = H_surd(p, z);
  const Surd dH = H_derivative_surd(p, z);
  return (p.P() * z * (H * H)) + (kTwo * z * (kOne - z) * dH) - ((kTwo * p.M() * z - kOne) * H) - (kOne - z);
}

namespace {

BigRational rrrr_lhs(const GpiParams& p, const BigRational& z) {
  const BigRational r = p.r, M = p.M(), d = p.d();
  const BigRational r2 = r * r, r3 = r2 * r, z2 = z * z, z3 = z2 * z;
  const BigRational a = BigRational(-1) + BigRational(4) * z - BigRational(4) * r * z + BigRational(3) * r2 * z + z2 -
                        BigRational(8) * r * z2 + BigRational(8) * r2 * z2 - BigRational(4) * r3 * z2 + r2 * z3;
  const BigRational b = kOne - BigRational(3) * r * z + r2 * z + kTwo * r * z2 - kTwo * r2 * z2 + r3 * z2;
  const BigRational c = kTwo * z - r * z - BigRational(3) * r * z2 + r2 * z2 + r2 * z3;
  return a + M * b - kTwo * d * d * c;
}

BigRational rrrr_numerator(const GpiParams& p, const BigRational& z) {
  const BigRational r = p.r, P = p.P(), M = p.M(), d = p.d();
  const BigRational D = H_radicand(p, z);
  const BigRational first = P * z * (kOne - z) * (P * P * (kOne + r * r * z) - kTwo * d * d * r * (r * z - kOne));
  const BigRational second = (kTwo * M * z * (r + r * z - kTwo) - (r * r * z - kOne)) * D;
  return first + second;
}

}  // namespace

RationalInterval rrrr_margin(const GpiParams& p, const BigRational& z, const BigRational& width) {
  require_H_domain(p, z);
  const RationalInterval s = sqrt_enclosure(H_radicand(p, z), width);
  return RationalInterval(rrrr_lhs(p, z)) - RationalInterval(rrrr_numerator(p, z)) / s;
}

Surd rrrr_surd(const GpiParams& p, const BigRational& z) {
  require_H_domain(p, z);
  const BigRational D = H_radicand(p, z);
  return {rrrr_lhs(p, z), -rrrr_numerator(p, z) / D, D};
}

std::string_view to_string(Predicate p) {
  switch (p) {
    case Predicate::hfri: return "hfri";
    case Predicate::g_negative: return "g_negative";
    case Predicate::aug13v: return "aug13v";
    case Predicate::rrrr: return "rrrr";
    case Predicate::h_half: return "h_half";
    case Predicate::h_seventh: return "h_seventh";
  }
  return "hfri";
}

Predicate predicate_from_string(std::string_view name) {
  for (auto p : {Predicate::hfri, Predicate::g_negative, Predicate::aug13v, Predicate::rrrr, Predicate::h_half,
                 Predicate::h_seventh})
    if (to_string(p) == name) return p;
  throw std::invalid_argument("unknown predicate '" + std::string(name) + "'");
}

ZRange default_range(Predicate pred, const GpiParams& p) {
  const BigRational inv_r = kOne / p.r;
  switch (pred) {
    case Predicate::hfri: return {p.t, kOne, true, true};
    case Predicate::g_negative:
    case Predicate::aug13v: return {p.B(), kOne, true, true};
    case Predicate::rrrr: return {p.B(), BigRational(21, 10) / BigRational(2 * p.m2 + 1), true, true};
    case Predicate::h_half: return {inv_r * inv_r, inv_r, true, false};
    case Predicate::h_seventh: return {inv_r, p.B(), true, false};
  }
  throw std::invalid_argument("unknown predicate");
}

std::vector<BigRational> z_grid(const ZRange& range, int n) {
  if (n < 2) throw std::invalid_argument("grid needs at least 2 points");
  if (!(range.lo < range.hi)) throw std::invalid_argument("empty z range");
  const BigRational span = range.hi - range.lo;
  const BigRational nudge = span / BigRational(10L * n);
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    BigRational z = range.lo + span * BigRational(k, n - 1);
    if (k == 0 && range.lo_open) z += nudge;
    if (k == n - 1 && range.hi_open) z -= nudge;
    out.push_back(z);
  }
  return out;
}

namespace {

struct PointResult {
  Status status = Status::indeterminate;
  nlohmann::json json;
};

bool is_exact_predicate(Predicate pred) {
  return pred == Predicate::hfri || pred == Predicate::h_half || pred == Predicate::h_seventh;
}

void check_domain(Predicate pred, const GpiParams& p, const BigRational& z) {
  const BigRational inv_r2 = kOne / (p.r * p.r);
  switch (pred) {
    case Predicate::hfri:
      if (!(z > inv_r2 && z < kOne)) throw std::domain_error("hfri needs 1/r^2 < z < 1");
      break;
    case Predicate::h_half:
      if (!(z > inv_r2 && z <= kOne / p.r)) throw std::domain_error("h_half needs 1/r^2 < z <= 1/r");
      break;
    case Predicate::h_seventh:
      if (!(z > kOne / p.r && z <= p.B())) throw std::domain_error("h_seventh needs 1/r < z <= 2.75/(m2 m3)");
      break;
    default:
      if (!(z > inv_r2 && z <= kOne)) throw std::domain_error(std::string(to_string(pred)) + " needs 1/r^2 < z <= 1");
      break;
  }
}

PointResult eval_point(Predicate pred, const GpiParams& p, const BigRational& z, const ScanOptions& opts) {
  PointResult out;
  out.json = {{"z", z.str()}};
  if (is_exact_predicate(pred)) {
    Sign s;
    if (pred == Predicate::hfri) {
      const BigRational v = poly_eval(S_poly(p), "z", z);
      s = v.sign() > 0 ? Sign::positive : (v.sign() < 0 ? Sign::negative : Sign::zero);
      out.json["value"] = v.to_double();
    } else {
      const BigRational k = pred == Predicate::h_half ? BigRational(1, 2) : BigRational(1, 7);
      s = compare_H(p, z, k);
    }
    out.json["sign"] = to_string(s);
    out.status = s == Sign::positive ? Status::holds : Status::fails;
    out.json["verdict"] = to_string(out.status);
    return out;
  }
  // Interval predicates: G must be negative, the others positive.
  const Sign want = pred == Predicate::g_negative ? Sign::negative : Sign::positive;
  BigRational w = opts.width;
  RationalInterval enc;
  int halvings = 0;
  for (;; ++halvings, w /= kTwo) {
    Sign s = Sign::indeterminate;
    try {
      switch (pred) {
        case Predicate::g_negative: enc = G_value(p, z, w); break;
        case Predicate::aug13v: enc = aug13v_margin(p, z, w); break;
        case Predicate::rrrr: enc = rrrr_margin(p, z, w); break;
        default: throw std::logic_error("unexpected predicate");
      }
      s = enc.sign();
    } catch (const std::domain_error&) {
      // An enclosure touching a pole; a tighter width may separate it.
      s = Sign::indeterminate;
    }
    if (s != Sign::indeterminate) {
      out.status = s == want ? Status::holds : Status::fails;
      break;
    }
    if (halvings >= opts.refine_max) {
      out.status = Status::indeterminate;
      break;
    }
  }
  out.json["verdict"] = to_string(out.status);
  out.json["enclosure"] = {enc.lo().to_double(), enc.hi().to_double()};
  out.json["halvings"] = halvings;
  return out;
}

}  // namespace

CheckReport scan(Predicate pred, const GpiParams& p, const ScanOptions& opts) {
  const ZRange range = opts.range ? *opts.range : default_range(pred, p);
  const auto grid = z_grid(range, opts.grid_n);
  for (const auto& z : grid) check_domain(pred, p, z);
  const auto results =
      parallel_map(grid.size(), opts.jobs, [&](std::size_t i) { return eval_point(pred, p, grid[i], opts); });

  CheckReport rep;
  rep.name = "scan." + std::string(to_string(pred));
  int holds = 0, fails = 0, indet = 0;
  nlohmann::json points = nlohmann::json::array();
  nlohmann::json indet_points = nlohmann::json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    points.push_back(r.json);
    switch (r.status) {
      case Status::holds: ++holds; break;
      case Status::fails:
        ++fails;
        if (rep.witnesses.empty()) rep.witnesses.push_back({"z=" + grid[i].str(), "predicate fails"});
        break;
      default:
        ++indet;
        indet_points.push_back(grid[i].str());
        break;
    }
  }
  rep.status = fails > 0 ? Status::fails : (indet > 0 ? Status::indeterminate : Status::holds);
  rep.message = std::to_string(holds) + " hold, " + std::to_string(fails) + " fail, " + std::to_string(indet) +
                " indeterminate of " + std::to_string(grid.size());
  rep.details = {{"params", params_json(p)},
                 {"predicate", to_string(pred)},
                 {"method", is_exact_predicate(pred) ? "exact" : "interval"},
                 {"range",
                  {{"lo", range.lo.str()},
                   {"hi", range.hi.str()},
                   {"lo_open", range.lo_open},
                   {"hi_open", range.hi_open},
                   {"nudge", ((range.hi - range.lo) / BigRational(10L * opts.grid_n)).str()}}},
                 {"grid_n", opts.grid_n},
                 {"width", opts.width.str()},
                 {"refine_max", opts.refine_max},
                 {"counts", {{"holds", holds}, {"fails", fails}, {"indeterminate", indet}}},
                 {"indeterminate_points", indet_points},
                 {"points", points}};
  return rep;
}

namespace {

void require_real_x(double x) {
  if (!(std::abs(x) < 1)) throw std::domain_error("the real-exponent path needs |x| < 1");
  if (std::abs(x) > kMaxRealCorrelation) throw std::domain_error("the real-exponent path caps |x| at 0.999");
}

}  // namespace

CheckReport check_gpi_real(const RealGpiParams& rp, double a, double x) {
  require_real_x(x);
  const double z = x * x, y2 = rp.y2, y3 = rp.y3;
  const SeriesValue e3 = hyp_series_real(-y3 / 2 - 1, -y2 / 2, 0.5, z);
  const SeriesValue e2 = hyp_series_real(-y3 / 2, -y2 / 2 - 1, 0.5, z);
  const SeriesValue od = hyp_series_real(-y3 / 2, -y2 / 2, 1.5, z);
  const double c3 = a * a * (y3 + 1), c2 = y2 + 1, co = 2 * a * x * (y3 + 1) * (y2 + 1);
  const double lhs = c3 * e3.value + c2 * e2.value + co * od.value;
  const double rhs = a * a + 1 + 2 * a * x;
  const double margin = lhs - rhs;
  // Series tails plus a rounding allowance on the summed magnitudes.
  const double scale = std::abs(c3 * e3.value) + std::abs(c2 * e2.value) + std::abs(co * od.value) + std::abs(rhs);
  const double err = std::abs(c3) * e3.remainder_bound + std::abs(c2) * e2.remainder_bound +
                     std::abs(co) * od.remainder_bound + 1e-14 * scale;
  CheckReport rep;
  rep.name = "gpi_real";
  rep.margin_float = margin;
  rep.status = margin > err ? Status::holds : (margin < -err ? Status::fails : Status::indeterminate);
  rep.details = {{"y2", rp.y2}, {"y3", rp.y3}, {"a", a}, {"x", x}, {"lhs", lhs}, {"rhs", rhs}, {"error_bound", err}};
  if (rep.status == Status::fails) rep.witnesses.push_back({"a=" + fmt_double(a) + ",x=" + fmt_double(x), fmt_double(margin)});
  return rep;
}

double H_real(const RealGpiParams& rp, double z) {
  const double r = rp.r, y2 = rp.y2, y3 = rp.y3;
  if (!(r * r * z > 1) || z > 1) throw std::domain_error("H_real needs 1/r^2 < z <= 1");
  const double e = (y3 - y2) * (r * z - 1);
  const double D = e * e / 4 + std::pow((y2 + 1) * (y3 + 1), 3) * z;
  return ((y2 + y3 + 2) * (r * z - 1) / 2 + std::sqrt(D)) / (r * r * z - 1);
}

namespace {

constexpr double kRealMriTolerance = 1e-9;

}  // namespace

CheckReport check_mri_real(const RealGpiParams& rp, double x) {
  require_real_x(x);
  const double z = x * x;
  const SeriesValue f1 = hyp_series_real(-rp.y2 / 2, -rp.y3 / 2, 0.5, z);
  const SeriesValue f3 = hyp_series_real(-rp.y2 / 2, -rp.y3 / 2, 1.5, z);
  const double lhs = std::abs(x) * f3.value / f1.value;
  const bool cov_branch = z <= rp.t;
  const double bound = cov_branch ? std::abs(x) : H_real(rp, z) * std::abs(x);
  const double margin = bound - lhs;
  CheckReport rep;
  rep.name = "mri_real";
  rep.margin_float = margin;
  rep.status = margin < -kRealMriTolerance ? Status::fails : Status::holds;
  rep.details = {{"y2", rp.y2},   {"y3", rp.y3},   {"x", x},
                 {"lhs", lhs},    {"bound", bound}, {"branch", cov_branch ? "cov" : "H"},
                 {"tolerance", kRealMriTolerance}};
  if (rep.status == Status::fails) rep.witnesses.push_back({"x=" + fmt_double(x), fmt_double(margin)});
  return rep;
}

CheckReport find_mri_real_violation(const RealGpiParams& rp, int grid) {
  if (grid < 1) throw std::invalid_argument("grid must be >= 1");
  CheckReport rep;
  rep.name = "mri_real.find_violation";
  const int kmax = static_cast<int>(std::floor(kMaxRealCorrelation * grid));
  double worst = 0, worst_x = 0;
  int count = 0;
  for (int k = 1; k <= kmax; ++k) {
    const double x = static_cast<double>(k) / grid;
    const CheckReport c = check_mri_real(rp, x);
    if (c.status == Status::fails) {
      ++count;
      if (*c.margin_float < worst) {
        worst = *c.margin_float;
        worst_x = x;
      }
    }
  }
  rep.details = {{"y2", rp.y2}, {"y3", rp.y3}, {"grid", grid}, {"violations", count}};
  if (count > 0) {
    rep.status = Status::verified;
    rep.margin_float = worst;
    rep.witnesses.push_back({"x=" + fmt_double(worst_x), fmt_double(worst)});
    rep.message = std::to_string(count) + " violating correlations";
  } else {
    rep.status = Status::fails;
    rep.message = "no violation on the grid";
  }
  return rep;
}

}  // namespace gpiv
