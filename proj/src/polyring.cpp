#include "gpiverify/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace gpiv {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m) {
      h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

unsigned degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

}  // namespace

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable '" + vars_[i] + "'");
}

MultiPoly MultiPoly::constant(const BigRational& c, std::vector<std::string> vars) {
  MultiPoly p(std::move(vars));
  p.add_term(Monomial(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p({name});
  p.add_term({1}, BigRational(1));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars,
                                const std::vector<std::pair<Monomial, BigRational>>& terms) {
  MultiPoly p(std::move(vars));
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

int MultiPoly::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

BigRational MultiPoly::coeff(const Monomial& m) const {
  if (m.size() != vars_.size()) throw std::invalid_argument("monomial length does not match the ring");
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

BigRational MultiPoly::coeff(const std::map<std::string, std::uint32_t>& exps) const {
  Monomial m(vars_.size(), 0);
  for (const auto& [name, e] : exps) {
    const int idx = var_index(name);
    if (idx < 0) {
      if (e == 0) continue;
      return BigRational(0);
    }
    m[static_cast<std::size_t>(idx)] = e;
  }
  return coeff(m);
}

BigRational MultiPoly::constant_term() const { return coeff(Monomial(vars_.size(), 0)); }

unsigned MultiPoly::degree(std::string_view var) const {
  const int idx = var_index(var);
  if (idx < 0) return 0;
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(idx)]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
  return d;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  MultiPoly out(vars);
  std::vector<int> target(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) target[i] = out.var_index(vars_[i]);
  for (const auto& [m, c] : terms_) {
    Monomial nm(vars.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (target[i] < 0) throw std::invalid_argument("with_vars would drop variable '" + vars_[i] + "' in use");
      nm[static_cast<std::size_t>(target[i])] = m[i];
    }
    out.terms_.emplace(std::move(nm), c);
  }
  return out;
}

MultiPoly MultiPoly::trimmed() const {
  std::vector<std::string> used;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (degree(vars_[i]) > 0) used.push_back(vars_[i]);
  return with_vars(used);
}

void MultiPoly::add_term(const Monomial& m, const BigRational& c) {
  if (m.size() != vars_.size()) throw std::invalid_argument("monomial length does not match the ring");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.vars_ != vars_) {
    auto u = union_vars(vars_, o.vars_);
    *this = with_vars(u);
    return *this += o.with_vars(u);
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) {
    auto u = union_vars(a.vars_, b.vars_);
    return a.with_vars(u) * b.with_vars(u);
  }
  std::unordered_map<Monomial, BigRational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Monomial m(a.vars_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      auto [it, inserted] = acc.try_emplace(m, ca);
      if (inserted)
        it->second *= cb;
      else
        it->second += ca * cb;
    }
  }
  MultiPoly out(a.vars_);
  for (auto& [mono, c] : acc)
    if (!c.is_zero()) out.terms_.emplace(mono, std::move(c));
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  auto u = union_vars(a.vars_, b.vars_);
  return a.with_vars(u).terms_ == b.with_vars(u).terms_;
}

MultiPoly operator*(const BigRational& c, const MultiPoly& p) { return poly_scale(p, c); }
MultiPoly operator+(const MultiPoly& p, const BigRational& c) { return p + MultiPoly::constant(c, p.vars()); }
MultiPoly operator-(const MultiPoly& p, const BigRational& c) { return p + MultiPoly::constant(-c, p.vars()); }

MultiPoly poly_scale(const MultiPoly& p, const BigRational& c) {
  MultiPoly out(p.vars());
  if (c.is_zero()) return out;
  for (const auto& [m, v] : p.terms()) out.add_term(m, v * c);
  return out;
}

MultiPoly poly_pow(const MultiPoly& p, unsigned k) {
  MultiPoly result = MultiPoly::constant(BigRational(1), p.vars());
  MultiPoly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

namespace {

// Splits p by the exponent of variable `idx`: result[k] is the coefficient of
// var^k, expressed over the ring with that variable removed.
std::vector<MultiPoly> split_by_var(const MultiPoly& p, std::size_t idx) {
  std::vector<std::string> rest = p.vars();
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
  std::vector<MultiPoly> parts(p.degree(p.vars()[idx]) + 1, MultiPoly(rest));
  for (const auto& [m, c] : p.terms()) {
    Monomial rm = m;
    rm.erase(rm.begin() + static_cast<std::ptrdiff_t>(idx));
    parts[m[idx]].add_term(rm, c);
  }
  return parts;
}

std::size_t require_var(const MultiPoly& p, std::string_view var) {
  const int idx = p.var_index(var);
  if (idx < 0) throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
  return static_cast<std::size_t>(idx);
}

}  // namespace

MultiPoly substitute(const MultiPoly& p, std::string_view var, const MultiPoly& replacement) {
  const std::size_t idx = require_var(p, var);
  auto parts = split_by_var(p, idx);
  std::vector<std::string> rest = p.vars();
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
  const auto ring = union_vars(rest, replacement.vars());
  if (std::find(replacement.vars().begin(), replacement.vars().end(), var) != replacement.vars().end() &&
      replacement.degree(var) > 0)
    throw std::invalid_argument("replacement may not contain the substituted variable");

  MultiPoly result(ring);
  MultiPoly power = MultiPoly::constant(BigRational(1), ring);
  const MultiPoly rep = replacement.with_vars(ring);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) power *= rep;
    if (!parts[k].is_zero()) result += parts[k].with_vars(ring) * power;
  }
  return result;
}

MultiPoly substitute_rational(const MultiPoly& p, std::string_view var, const MultiPoly& num, const MultiPoly& den,
                              unsigned clear_power) {
  const std::size_t idx = require_var(p, var);
  const unsigned deg = p.degree(var);
  if (clear_power < deg)
    throw std::invalid_argument("clear_power " + std::to_string(clear_power) + " is below the degree " +
                                std::to_string(deg) + " of '" + std::string(var) + "'");
  if (den.is_zero()) throw std::domain_error("substitute_rational with a zero denominator");
  auto parts = split_by_var(p, idx);
  std::vector<std::string> rest = p.vars();
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
  const auto ring = union_vars(union_vars(rest, num.vars()), den.vars());
  const MultiPoly n = num.with_vars(ring), d = den.with_vars(ring);

  std::vector<MultiPoly> num_pow{MultiPoly::constant(BigRational(1), ring)};
  std::vector<MultiPoly> den_pow{MultiPoly::constant(BigRational(1), ring)};
  for (unsigned k = 1; k <= clear_power; ++k) {
    if (k <= deg) num_pow.push_back(num_pow.back() * n);
    den_pow.push_back(den_pow.back() * d);
  }
  MultiPoly result(ring);
  for (unsigned k = 0; k < parts.size(); ++k)
    if (!parts[k].is_zero()) result += parts[k].with_vars(ring) * num_pow[k] * den_pow[clear_power - k];
  return result;
}

MultiPoly falling_factorial(const MultiPoly& x, unsigned j) {
  MultiPoly result = MultiPoly::constant(BigRational(1), x.vars());
  for (unsigned i = 0; i < j; ++i) result *= x - BigRational(static_cast<long>(i));
  return result;
}

MultiPoly falling_factorial(const std::string& var, unsigned j) { return falling_factorial(MultiPoly::variable(var), j); }

MultiPoly derivative(const MultiPoly& p, std::string_view var) {
  MultiPoly out(p.vars());
  const int idx = p.var_index(var);
  if (idx < 0) return out;
  const auto i = static_cast<std::size_t>(idx);
  for (const auto& [m, c] : p.terms()) {
    if (m[i] == 0) continue;
    Monomial dm = m;
    dm[i] -= 1;
    out.add_term(dm, c * BigRational(static_cast<long>(m[i])));
  }
  return out;
}

BigRational poly_eval(const MultiPoly& p, const std::map<std::string, BigRational>& point) {
  const auto& vars = p.vars();
  // powers[i][e] = value_i^e, built lazily up to the degree used.
  std::vector<std::vector<BigRational>> powers(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = point.find(vars[i]);
    if (it == point.end()) throw std::invalid_argument("no value assigned to variable '" + vars[i] + "'");
    powers[i].push_back(BigRational(1));
    const unsigned d = p.degree(vars[i]);
    for (unsigned e = 1; e <= d; ++e) powers[i].push_back(powers[i].back() * it->second);
  }
  BigRational sum(0);
  for (const auto& [m, c] : p.terms()) {
    BigRational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t *= powers[i][m[i]];
    sum += t;
  }
  return sum;
}

BigRational poly_eval(const MultiPoly& p, std::string_view var, const BigRational& value) {
  std::map<std::string, BigRational> point;
  for (const auto& v : p.vars()) {
    if (v == var) {
      point.emplace(v, value);
    } else if (p.degree(v) == 0) {
      point.emplace(v, BigRational(0));
    } else {
      throw std::invalid_argument("polynomial depends on '" + v + "' besides '" + std::string(var) + "'");
    }
  }
  if (p.var_index(var) < 0 && !p.is_constant())
    throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
  return poly_eval(p, point);
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class TextParser {
public:
  TextParser(std::string_view text, const std::vector<std::string>& allowed) : text_(text), allowed_(allowed) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    if (!allowed_.empty()) return p.with_vars(allowed_);
    return p;
  }

private:
  std::string_view text_;
  const std::vector<std::string>& allowed_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool starts_atom(char c) {
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  }

  MultiPoly expr() {
    MultiPoly acc;
    bool negate = false;
    if (char c = peek(); c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      MultiPoly t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        MultiPoly d = factor();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division by a non-constant or zero expression");
        }
        acc = poly_scale(acc, BigRational(1) / d.constant_term());
      } else if (starts_atom(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      base = poly_pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      try {
        return MultiPoly::constant(BigRational::parse(text_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (!allowed_.empty() && std::find(allowed_.begin(), allowed_.end(), name) == allowed_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return MultiPoly::variable(name);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }
};

}  // namespace

MultiPoly poly_parse(std::string_view text, const std::vector<std::string>& allowed_vars) {
  return TextParser(text, allowed_vars).run();
}

std::string poly_serialize(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = c.sign() < 0;
    const BigRational mag = neg ? -c : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const bool is_one = mag == BigRational(1);
    bool wrote = false;
    if (!is_one || degree_of(m) == 0) {
      os << mag.str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << (wrote ? "*" : "") << p.vars()[i];
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

nlohmann::json poly_to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"c", it->second.str()}, {"e", it->first}});
  return {{"vars", p.vars()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw std::invalid_argument("polynomial JSON needs \"vars\" and \"terms\"");
  MultiPoly p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& t : j.at("terms")) {
    auto e = t.at("e").get<Monomial>();
    if (e.size() != p.vars().size()) throw std::invalid_argument("term exponent length does not match \"vars\"");
    p.add_term(e, BigRational::parse(t.at("c").get<std::string>()));
  }
  return p;
}

}  // namespace gpiv
