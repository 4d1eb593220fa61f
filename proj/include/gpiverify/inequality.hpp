#pragma once

// The objects of the three-dimensional product inequality argument: the
// parameters r and t, the function H and its derivative, the polynomials S,
// h, f and g, the function G, and the predicates built on them.

#include <optional>
#include <string_view>

#include "gpiverify/exactnum.hpp"
#include "gpiverify/moments.hpp"
#include "gpiverify/polyring.hpp"
#include "gpiverify/report.hpp"

namespace gpiv {

/// Membership in S = {(1, m3 >= 5)} u {(2, m3 >= 3)} u {(m2, m3) : m3 >= m2 >= 3}.
bool in_S(long m2, long m3);

struct GpiParams {
  long m2 = 1;
  long m3 = 1;
  BigRational r;  // (2m2+1)(2m3+1) + 1
  BigRational t;  // 1 / (r + (1 + 1/(2m2))(1 + 1/(2m3)))
  bool in_S = false;

  /// (2m2+1)(2m3+1) = r - 1.
  BigRational P() const { return r - BigRational(1); }
  /// m2 + m3 + 1.
  BigRational M() const { return BigRational(m2 + m3 + 1); }
  /// m3 - m2.
  BigRational d() const { return BigRational(m3 - m2); }
  /// The bound 2.75 / (m2 m3) separating the two regimes of the z-range.
  BigRational B() const { return BigRational(11, 4) / BigRational(m2 * m3); }
};

/// Throws std::invalid_argument unless m2, m3 >= 1; checks 1/r^2 < t < 1/r.
GpiParams make_params(long m2, long m3);

struct RealGpiParams {
  double y2 = 0;
  double y3 = 0;
  double r = 0;
  double t = 0;
};

/// Throws std::invalid_argument unless y2, y3 > 0.
RealGpiParams make_real_params(double y2, double y3);

/// beta = -M(1 - rz)/P, gamma = (1 - r^2 z)/P, leading = 1 - z.
struct QuadraticForm {
  BigRational beta;
  BigRational gamma;
  BigRational leading;
};

/// Builds the form at z and checks
/// beta^2 - (1-z) gamma = [d(1 - rz)/P]^2 + P z exactly (std::logic_error otherwise).
QuadraticForm make_quadratic_form(const GpiParams& p, const BigRational& z);

/// D(z) = [d(rz-1)]^2 + P^3 z, the radicand of H.
BigRational H_radicand(const GpiParams& p, const BigRational& z);

/// H(z) = [M(rz-1) + sqrt(D)] / (r^2 z - 1) as an exact surd. Requires 1/r^2 < z <= 1.
Surd H_surd(const GpiParams& p, const BigRational& z);
/// H'(z) as an exact surd over the same radicand.
Surd H_derivative_surd(const GpiParams& p, const BigRational& z);

/// Enclosure of H(z) from a sqrt(D) enclosure of width `width`.
RationalInterval H_value(const GpiParams& p, const BigRational& z, const BigRational& width);
/// Enclosure of H'(z).
RationalInterval H_derivative(const GpiParams& p, const BigRational& z, const BigRational& width);
/// 2M / (2 + P).
BigRational H_at_one(const GpiParams& p);

/// Exact sign of H(z) - k.
Sign compare_H(const GpiParams& p, const BigRational& z, const BigRational& k);

enum class LemmaBranch { half, seventh };
std::string_view to_string(LemmaBranch b);

/// H(z) > 1/2 on (1/r^2, 1/r] or H(z) > 1/7 on (1/r, 2.75/(m2 m3)], decided
/// exactly. Throws std::domain_error when z lies outside the branch's range.
CheckReport h_lower_bound_check(const GpiParams& p, const BigRational& z, LemmaBranch which);

/// f1 = F(-m2,-m3;1/2;z), f2 = F(-m2,-m3;3/2;z),
/// S = P (1-z) f1^2 + 2M (rz-1) f1 f2 - (r^2 z - 1) f2^2, over {"z"}.
MultiPoly S_poly(const GpiParams& p);
/// The same with m3 an indeterminate, over {"z", "m3"}.
MultiPoly S_poly_symbolic(long m2);

/// (1+c^2)^(2m2+1) S(z) with z = c^2/(1+c^2) and m3 = b^2 + 5, b^2 + 3, b^2 + m2
/// for m2 = 1, 2, >= 3. Over {"b", "c"}; 1 <= m2 <= 7.
MultiPoly h_poly(long m2);

/// The degree-4 truncated form f(x2, x3, u) with the 17! scale, over {"x2", "x3", "u"}.
MultiPoly f_truncated_poly();
/// (1+c^2)^9 f with u = (11/4) c^2/(1+c^2), x2 = a^2 + 8, x3 = b^2 + 8, over {"a", "b", "c"}.
MultiPoly g_poly();

/// E[X1^2 X2^2m2 X3^2m3] - E[X1^2] E[X2^2m2] E[X3^2m3] for X1 = X2 + a X3 and
/// unit-variance (X2, X3) with correlation x. Holds iff the margin is >= 0;
/// details.equality is set iff it is exactly 0.
CheckReport check_gpi(const GpiParams& p, const BigRational& a, const BigRational& x);

/// Moment ratio bound on |E[X2^(2m2+1) X3^(2m3+1)]|. Decided exactly; the
/// report also carries an enclosure of LHS - bound of the given width.
CheckReport check_mri(const GpiParams& p, const GaussianPair& pair, const BigRational& width);

/// Searches correlations x = k/grid, k = 1..grid (unit variances) for a
/// violation. Status verified with a witness when one is found, fails otherwise.
CheckReport find_mri_violation(const GpiParams& p, int grid, const BigRational& width);

/// S(z) > 0 for 1/r^2 < z < 1, which implies the hypergeometric ratio
/// inequality F(..;1/2;z)/F(..;3/2;z) > 1/H(z). Throws std::domain_error
/// outside (1/r^2, 1).
CheckReport hfri_check(const GpiParams& p, const BigRational& z);

/// Enclosure of f1/f2 - 1/H(z), the ratio inequality evaluated directly.
RationalInterval hfri_ratio_margin(const GpiParams& p, const BigRational& z, const BigRational& width);

/// G(z) = F(-m2-1,-m3;1/2;z) - [(1-z) + (2m3+1) z H(z)] F(-m2,-m3;1/2;z).
RationalInterval G_value(const GpiParams& p, const BigRational& z, const BigRational& width);
Surd G_surd(const GpiParams& p, const BigRational& z);
/// G(1), from Chu-Vandermonde values and H(1).
BigRational G_at_one(const GpiParams& p);

/// P z H^2 + 2 z (1-z) H' - (1-z) - (2Mz - 1) H, positive iff the
/// derivative-condition inequality holds at z.
RationalInterval aug13v_margin(const GpiParams& p, const BigRational& z, const BigRational& width);
Surd aug13v_surd(const GpiParams& p, const BigRational& z);

/// Polynomial left side minus the radical right side of the cleared form of
/// the derivative-condition inequality.
RationalInterval rrrr_margin(const GpiParams& p, const BigRational& z, const BigRational& width);
Surd rrrr_surd(const GpiParams& p, const BigRational& z);

enum class Predicate { hfri, g_negative, aug13v, rrrr, h_half, h_seventh };
std::string_view to_string(Predicate p);
Predicate predicate_from_string(std::string_view name);

struct ZRange {
  BigRational lo;
  BigRational hi;
  bool lo_open = true;
  bool hi_open = true;
};

/// The interval each predicate is claimed on:
///   hfri (t, 1); g_negative and aug13v (2.75/(m2 m3), 1);
///   rrrr (2.75/(m2 m3), 2.1/(2m2+1)); h_half (1/r^2, 1/r];
///   h_seventh (1/r, 2.75/(m2 m3)].
ZRange default_range(Predicate pred, const GpiParams& p);

/// Grid z_k = lo + k (hi - lo)/(n - 1), k = 0..n-1, with open ends moved
/// inward by (hi - lo)/(10 n).
std::vector<BigRational> z_grid(const ZRange& range, int n);

struct ScanOptions {
  std::optional<ZRange> range;  // default_range when empty
  int grid_n = 101;
  BigRational width = BigRational(1, 1000000);
  int refine_max = 20;
  unsigned jobs = 1;
};

/// Evaluates a predicate on a grid. Exact predicates (hfri, h_half,
/// h_seventh) are decided exactly; the others use enclosures, halving the
/// width up to refine_max times before a point counts as indeterminate.
CheckReport scan(Predicate pred, const GpiParams& p, const ScanOptions& opts);

/// a^2 (y3+1) F(-y3/2-1,-y2/2;1/2;x^2) + (y2+1) F(-y3/2,-y2/2-1;1/2;x^2)
///   + 2ax (y3+1)(y2+1) F(-y3/2,-y2/2;3/2;x^2) - (a^2 + 1 + 2ax).
/// Holds when the margin exceeds the series tolerance bound.
CheckReport check_gpi_real(const RealGpiParams& rp, double a, double x);

/// H_{y2,y3}(z) in double precision.
double H_real(const RealGpiParams& rp, double z);

/// The real-exponent moment ratio bound at correlation x (unit variances):
/// margin = bound - |x| F(..;3/2;x^2)/F(..;1/2;x^2).
CheckReport check_mri_real(const RealGpiParams& rp, double x);

/// Searches x = k/grid, k = 1..floor(0.999 grid), for a real-exponent moment
/// ratio violation. Status verified with a witness when found.
CheckReport find_mri_real_violation(const RealGpiParams& rp, int grid);

}  // namespace gpiv
