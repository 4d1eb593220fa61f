#pragma once

// Sparse multivariate polynomials over BigRational.
//
// A MultiPoly owns an ordered variable list and a map from exponent vectors
// to nonzero coefficients. Binary operations between polynomials over
// different variable lists first extend both to the union list (left
// operand's order, then unseen variables of the right operand).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gpiverify/exactnum.hpp"

namespace gpiv {

using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic by
/// variable position.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class MultiPoly {
public:
  using TermMap = std::map<Monomial, BigRational, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);

  static MultiPoly constant(const BigRational& c, std::vector<std::string> vars = {});
  static MultiPoly variable(const std::string& name);
  /// Sums the given terms; duplicate monomials accumulate and zeros vanish.
  static MultiPoly from_terms(std::vector<std::string> vars,
                              const std::vector<std::pair<Monomial, BigRational>>& terms);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Index of a variable in vars(), or -1.
  int var_index(std::string_view name) const;

  /// Coefficient of a monomial (0 when absent). Exponent vector must match vars().
  BigRational coeff(const Monomial& m) const;
  /// Coefficient by variable name; unnamed variables have exponent 0.
  BigRational coeff(const std::map<std::string, std::uint32_t>& exps) const;
  BigRational constant_term() const;

  unsigned degree(std::string_view var) const;
  unsigned total_degree() const;

  /// Re-expresses the polynomial over `vars`, which must contain every
  /// variable that occurs with a nonzero exponent.
  MultiPoly with_vars(const std::vector<std::string>& vars) const;
  /// Drops variables that never occur.
  MultiPoly trimmed() const;

  void add_term(const Monomial& m, const BigRational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  /// Equality of the represented polynomial, independent of variable lists.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

MultiPoly operator*(const BigRational& c, const MultiPoly& p);
MultiPoly operator+(const MultiPoly& p, const BigRational& c);
MultiPoly operator-(const MultiPoly& p, const BigRational& c);

std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

MultiPoly poly_scale(const MultiPoly& p, const BigRational& c);
MultiPoly poly_pow(const MultiPoly& p, unsigned k);

/// p with `var` replaced by `replacement`; `var` leaves the ring.
MultiPoly substitute(const MultiPoly& p, std::string_view var, const MultiPoly& replacement);

/// den^clear_power * p(var <- num/den). Throws when clear_power < deg_var(p).
MultiPoly substitute_rational(const MultiPoly& p, std::string_view var, const MultiPoly& num,
                              const MultiPoly& den, unsigned clear_power);

/// x (x-1) ... (x-j+1); the empty product for j = 0.
MultiPoly falling_factorial(const MultiPoly& x, unsigned j);
MultiPoly falling_factorial(const std::string& var, unsigned j);

MultiPoly derivative(const MultiPoly& p, std::string_view var);

/// Exact value; every ring variable must be assigned.
BigRational poly_eval(const MultiPoly& p, const std::map<std::string, BigRational>& point);
/// Evaluation of a univariate-in-use polynomial at a single variable.
BigRational poly_eval(const MultiPoly& p, std::string_view var, const BigRational& value);

// Text form: "48*b^6*c^4 - 3/2*b^2*c + 180". The parser also accepts
// implicit multiplication ("48 b^6 c^4"), parentheses, exact decimals and
// division by constants. With a non-empty `allowed_vars` the result lives in
// that ring and any other identifier is a parse error.
MultiPoly poly_parse(std::string_view text, const std::vector<std::string>& allowed_vars = {});
std::string poly_serialize(const MultiPoly& p);

// JSON form: {"vars": [...], "terms": [{"c": "48", "e": [6, 4]}, ...]}
nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

}  // namespace gpiv
