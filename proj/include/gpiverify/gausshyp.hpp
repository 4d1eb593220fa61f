#pragma once

// Terminating Gauss hypergeometric polynomials F(-m2, -m3; c; z).

#include <optional>
#include <string_view>

#include "gpiverify/exactnum.hpp"
#include "gpiverify/polyring.hpp"

namespace gpiv {

struct HypParams {
  long m2 = 0;
  /// Empty means m3 is an indeterminate (variable "m3").
  std::optional<long> m3;
  BigRational c = BigRational(1, 2);
};

/// Rising factorial (x)_j = x (x+1) ... (x+j-1).
BigRational pochhammer(const BigRational& x, unsigned j);

/// Sum over j of (a)_j (b)_j / (c)_j z^j / j! for integers a, b <= 0, as a
/// polynomial in "z". Any rational c with (c)_j != 0 on the summation range.
MultiPoly hyp_series(long a, long b, const BigRational& c);

/// F(-m2, -m3; c; z) for c in {1/2, 3/2}. Throws std::invalid_argument for a
/// symbolic m3, negative indices or another c.
MultiPoly hyp_poly(const HypParams& params);

/// F(-m2, -m3; c; z) over the ring {"z", "m3"}, with (-m3)_j written as
/// (-1)^j m3 (m3-1) ... (m3-j+1).
MultiPoly hyp_poly_symbolic_m3(long m2, const BigRational& c);

/// F(-m2, -m3; c; 1) by Chu-Vandermonde: (c+m3)_{m2} / (c)_{m2}.
BigRational hyp_value_at_one(const HypParams& params);

enum class ContiguousRelation { derivative, rel21, rel31, rel37, rel38 };

std::string_view to_string(ContiguousRelation r);
/// Accepts the names printed by to_string.
ContiguousRelation contiguous_relation_from_string(std::string_view name);

/// LHS - RHS of a contiguous relation with a = -m2, b = -m3, assembled from
/// hyp_series instances:
///   derivative, rel21:  z F' - a (F(a+1) - F)
///   rel31:  (c - 2a - (b - a) z) F + a (1 - z) F(a+1) - (c - a) F(a-1)
///   rel37:  (b - a)(1 - z) F - (c - a) F(a-1) + (c - b) F(b-1)
///   rel38:  c (1 - z) F - c F(a-1) + (c - b) z F(c+1)
/// Terms carrying a factor a are dropped when a = 0. The result is the zero
/// polynomial whenever the relation holds.
MultiPoly contiguous_residual(ContiguousRelation relation, long m2, long m3, const BigRational& c);

}  // namespace gpiv
