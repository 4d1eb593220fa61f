#include "gpiverify/gausshyp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gpiv {

namespace {

void require_public_c(const BigRational& c) {
  if (c != BigRational(1, 2) && c != BigRational(3, 2))
    throw std::invalid_argument("c must be 1/2 or 3/2, got " + c.str());
}

}  // namespace

BigRational pochhammer(const BigRational& x, unsigned j) {
  BigRational r(1);
  for (unsigned i = 0; i < j; ++i) r *= x + BigRational(static_cast<long>(i));
  return r;
}

MultiPoly hyp_series(long a, long b, const BigRational& c) {
  if (a > 0 || b > 0) throw std::invalid_argument("hyp_series needs a, b <= 0 for termination");
  const long n = std::min(-a, -b);
  MultiPoly p({"z"});
  BigRational term(1);
  for (long j = 0; j <= n; ++j) {
    if (j > 0) {
      const BigRational den = (c + BigRational(j - 1)) * BigRational(j);
      if (den.is_zero()) throw std::domain_error("(c)_j vanishes inside the summation range");
      term *= BigRational(a + j - 1) * BigRational(b + j - 1) / den;
    }
    p.add_term({static_cast<std::uint32_t>(j)}, term);
  }
  return p;
}

MultiPoly hyp_poly(const HypParams& params) {
  if (!params.m3) throw std::invalid_argument("hyp_poly needs a numeric m3");
  if (params.m2 < 0 || *params.m3 < 0) throw std::invalid_argument("m2 and m3 must be >= 0");
  require_public_c(params.c);
  return hyp_series(-params.m2, -*params.m3, params.c);
}

MultiPoly hyp_poly_symbolic_m3(long m2, const BigRational& c) {
  if (m2 < 0) throw std::invalid_argument("m2 must be >= 0");
  require_public_c(c);
  const std::vector<std::string> ring{"z", "m3"};
  MultiPoly result(ring);
  const MultiPoly z = MultiPoly::variable("z").with_vars(ring);
  const MultiPoly m3 = MultiPoly::variable("m3").with_vars(ring);
  MultiPoly zpow = MultiPoly::constant(BigRational(1), ring);
  for (long j = 0; j <= m2; ++j) {
    if (j > 0) zpow *= z;
    // (-m2)_j (-1)^j / ((c)_j j!) times m3 (m3-1) ... (m3-j+1).
    BigRational k = pochhammer(BigRational(-m2), static_cast<unsigned>(j)) /
                    (pochhammer(c, static_cast<unsigned>(j)) * BigRational(factorial(static_cast<unsigned>(j))));
    if (j % 2 == 1) k = -k;
    result += poly_scale(falling_factorial(m3, static_cast<unsigned>(j)) * zpow, k);
  }
  return result;
}

BigRational hyp_value_at_one(const HypParams& params) {
  if (!params.m3) throw std::invalid_argument("hyp_value_at_one needs a numeric m3");
  if (params.m2 < 0 || *params.m3 < 0) throw std::invalid_argument("m2 and m3 must be >= 0");
  require_public_c(params.c);
  // F(-n, b; c; 1) = (c - b)_n / (c)_n with n = m2, b = -m3.
  const auto n = static_cast<unsigned>(params.m2);
  return pochhammer(params.c + BigRational(*params.m3), n) / pochhammer(params.c, n);
}

std::string_view to_string(ContiguousRelation r) {
  switch (r) {
    case ContiguousRelation::derivative: return "derivative";
    case ContiguousRelation::rel21: return "rel21";
    case ContiguousRelation::rel31: return "rel31";
    case ContiguousRelation::rel37: return "rel37";
    case ContiguousRelation::rel38: return "rel38";
  }
  return "derivative";
}

ContiguousRelation contiguous_relation_from_string(std::string_view name) {
  for (auto r : {ContiguousRelation::derivative, ContiguousRelation::rel21, ContiguousRelation::rel31,
                 ContiguousRelation::rel37, ContiguousRelation::rel38})
    if (to_string(r) == name) return r;
  throw std::invalid_argument("unknown contiguous relation '" + std::string(name) + "'");
}

MultiPoly contiguous_residual(ContiguousRelation relation, long m2, long m3, const BigRational& c) {
  if (m2 < 0 || m3 < 0) throw std::invalid_argument("m2 and m3 must be >= 0");
  const long a = -m2, b = -m3;
  const BigRational A(a), B(b);
  const MultiPoly z = MultiPoly::variable("z");
  const MultiPoly one = MultiPoly::constant(BigRational(1), {"z"});
  const MultiPoly F = hyp_series(a, b, c);

  switch (relation) {
    case ContiguousRelation::derivative:
    case ContiguousRelation::rel21: {
      MultiPoly r = z * derivative(F, "z");
      if (a != 0) r -= poly_scale(hyp_series(a + 1, b, c) - F, A);
      return r;
    }
    case ContiguousRelation::rel31: {
      MultiPoly r = (MultiPoly::constant(c - BigRational(2) * A, {"z"}) - poly_scale(z, B - A)) * F;
      if (a != 0) r += poly_scale((one - z) * hyp_series(a + 1, b, c), A);
      r -= poly_scale(hyp_series(a - 1, b, c), c - A);
      return r;
    }
    case ContiguousRelation::rel37: {
      MultiPoly r = poly_scale((one - z) * F, B - A);
      r -= poly_scale(hyp_series(a - 1, b, c), c - A);
      r += poly_scale(hyp_series(a, b - 1, c), c - B);
      return r;
    }
    case ContiguousRelation::rel38: {
      MultiPoly r = poly_scale((one - z) * F, c);
      r -= poly_scale(hyp_series(a - 1, b, c), c);
      r += poly_scale(z * hyp_series(a, b, c + BigRational(1)), c - B);
      return r;
    }
  }
  throw std::invalid_argument("unknown contiguous relation");
}

}  // namespace gpiv
