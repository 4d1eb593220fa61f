#include "gpiverify/soscert.hpp"

#include <fstream>
#include <sstream>

#include "gpiverify/inequality.hpp"

#ifndef GPIV_DATA_DIR
#define GPIV_DATA_DIR "data"
#endif

namespace gpiv {

namespace {

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("malformed JSON in " + path.string() + ": " + e.what());
  }
}

std::string monomial_text(const std::vector<std::string>& vars, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

bool all_even(const Monomial& m) {
  for (auto e : m)
    if (e % 2 != 0) return false;
  return true;
}

}  // namespace

SosCertificate certificate_from_json(const nlohmann::json& j) {
  SosCertificate cert;
  try {
    cert.ring = j.at("ring").get<std::vector<std::string>>();
    cert.target = poly_from_json(j.at("target")).with_vars(cert.ring);
    if (j.contains("scale")) cert.context_scale = BigRational::parse(j.at("scale").get<std::string>());
    if (j.contains("host")) cert.host_name = j.at("host").get<std::string>();
    if (j.contains("source")) cert.source = j.at("source").get<std::string>();
    for (const auto& s : j.at("squares")) {
      WeightedSquare w{BigRational::parse(s.at("lambda").get<std::string>()),
                       poly_from_json(s.at("poly")).with_vars(cert.ring)};
      cert.squares.push_back(std::move(w));
    }
  } catch (const nlohmann::json::exception& e) {
    throw MalformedCertificate(std::string("certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw MalformedCertificate(std::string("certificate: ") + e.what());
  }
  for (std::size_t i = 0; i < cert.squares.size(); ++i)
    if (cert.squares[i].lambda.sign() <= 0)
      throw MalformedCertificate("square " + std::to_string(i) + " has lambda " + cert.squares[i].lambda.str() + " <= 0");
  if (cert.context_scale.sign() <= 0) throw MalformedCertificate("certificate scale must be positive");
  return cert;
}

nlohmann::json certificate_to_json(const SosCertificate& cert) {
  nlohmann::json j;
  j["ring"] = cert.ring;
  if (!cert.source.empty()) j["source"] = cert.source;
  if (!cert.host_name.empty()) j["host"] = cert.host_name;
  j["scale"] = cert.context_scale.str();
  j["target"] = poly_to_json(cert.target);
  auto& sq = j["squares"] = nlohmann::json::array();
  for (const auto& w : cert.squares) sq.push_back({{"lambda", w.lambda.str()}, {"poly", poly_to_json(w.poly)}});
  return j;
}

SosCertificate load_certificate(const std::filesystem::path& path) { return certificate_from_json(read_json(path)); }

void save_certificate(const SosCertificate& cert, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << certificate_to_json(cert).dump(1) << '\n';
}

MultiPoly load_poly_json(const std::filesystem::path& path) { return poly_from_json(read_json(path)); }

CheckReport verify_sos(const SosCertificate& cert) {
  for (std::size_t i = 0; i < cert.squares.size(); ++i)
    if (cert.squares[i].lambda.sign() <= 0)
      throw MalformedCertificate("square " + std::to_string(i) + " has lambda " + cert.squares[i].lambda.str() +
                                 " <= 0");
  MultiPoly residual = cert.target;
  for (const auto& w : cert.squares) residual -= poly_scale(w.poly * w.poly, w.lambda);
  CheckReport rep;
  rep.name = "sos" + (cert.host_name.empty() ? std::string() : "." + cert.host_name);
  rep.details = {{"squares", cert.squares.size()}, {"target_terms", cert.target.size()}};
  if (residual.is_zero()) {
    rep.status = Status::verified;
    // Strictness: a nonzero constant square bounds the target away from 0.
    for (const auto& w : cert.squares) {
      if (w.poly.is_constant() && !w.poly.is_zero()) {
        const BigRational v = w.lambda * w.poly.constant_term() * w.poly.constant_term();
        rep.details["strict_lower_bound"] = v.str();
        rep.witnesses.push_back({"constant square", v.str()});
        break;
      }
    }
  } else {
    rep.status = Status::residual_nonzero;
    rep.residual = residual.trimmed();
    rep.message = "target minus the weighted squares leaves " + std::to_string(residual.size()) + " terms";
  }
  return rep;
}

CheckReport verify_nonneg_coeffs(const MultiPoly& p) {
  CheckReport rep;
  rep.name = "nonneg_coeffs";
  BigRational min_coeff;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first || c < min_coeff) min_coeff = c;
    first = false;
    if (c.sign() < 0) rep.witnesses.push_back({monomial_text(p.vars(), m), c.str()});
  }
  rep.status = rep.witnesses.empty() ? Status::verified : Status::coefficient_negative;
  rep.details = {{"terms", p.size()}, {"negative_terms", rep.witnesses.size()}};
  if (!first) rep.details["min_coefficient"] = min_coeff.str();
  return rep;
}

CheckReport verify_decomposition(const MultiPoly& host, const BigRational& scale, const MultiPoly& target) {
  const MultiPoly rest = host - poly_scale(target, scale);
  CheckReport rep;
  rep.name = "decomposition";
  for (const auto& [m, c] : rest.terms()) {
    if (c.sign() < 0) rep.witnesses.push_back({monomial_text(rest.vars(), m), c.str()});
    else if (!all_even(m)) rep.witnesses.push_back({monomial_text(rest.vars(), m), "odd exponent"});
  }
  rep.status = rep.witnesses.empty() ? Status::verified : Status::coefficient_negative;
  rep.details = {{"scale", scale.str()}, {"rest_terms", rest.size()}};
  return rep;
}

CheckReport verify_proportional(const MultiPoly& p, const MultiPoly& ref) {
  CheckReport rep;
  rep.name = "proportional";
  const auto ring = union_vars(p.vars(), ref.vars());
  const MultiPoly a = p.with_vars(ring), b = ref.with_vars(ring);
  std::optional<BigRational> ratio;
  std::size_t mismatched = 0;
  for (const auto& [m, c] : a.terms()) {
    const BigRational rc = b.coeff(m);
    if (rc.is_zero()) {
      ++mismatched;
      if (rep.witnesses.size() < 5) rep.witnesses.push_back({monomial_text(ring, m), "missing from reference"});
      continue;
    }
    const BigRational q = c / rc;
    if (!ratio) {
      ratio = q;
    } else if (q != *ratio) {
      ++mismatched;
      if (rep.witnesses.size() < 5) rep.witnesses.push_back({monomial_text(ring, m), "ratio " + q.str()});
    }
  }
  for (const auto& [m, c] : b.terms()) {
    if (a.coeff(m).is_zero()) {
      ++mismatched;
      if (rep.witnesses.size() < 5) rep.witnesses.push_back({monomial_text(ring, m), "missing from regenerated"});
    }
  }
  const bool ok = mismatched == 0 && ratio && ratio->sign() > 0;
  rep.status = ok ? Status::verified : Status::residual_nonzero;
  rep.details = {{"terms", a.size()}, {"reference_terms", b.size()}, {"mismatched", mismatched}};
  if (ratio) rep.details["scalar"] = ratio->str();
  return rep;
}

std::filesystem::path default_data_dir() { return GPIV_DATA_DIR; }

namespace {

std::filesystem::path h_path(const std::filesystem::path& dir, long m2, const char* suffix) {
  return dir / "certs" / ("h" + std::to_string(m2) + suffix);
}

void require_h_index(long m2) {
  if (m2 < 1 || m2 > 7) throw std::invalid_argument("bundled h data covers 1 <= m2 <= 7");
}

}  // namespace

CheckReport verify_h_expansion(long m2, const std::filesystem::path& data_dir) {
  require_h_index(m2);
  const MultiPoly printed = load_poly_json(h_path(data_dir, m2, ".json"));
  const MultiPoly regen = h_poly(m2);
  const MultiPoly diff = regen - printed;
  CheckReport rep;
  rep.name = "h_expansion.h" + std::to_string(m2);
  rep.details = {{"m2", m2}, {"terms", regen.size()}, {"printed_terms", printed.size()}};
  if (diff.is_zero()) {
    rep.status = Status::verified;
  } else {
    rep.status = Status::residual_nonzero;
    rep.residual = diff.trimmed();
    rep.message = "regenerated and printed expansions differ in " + std::to_string(diff.size()) + " terms";
  }
  return rep;
}

CheckReport verify_bracket_positivity(long m2, const std::filesystem::path& data_dir) {
  require_h_index(m2);
  SosCertificate cert = load_certificate(h_path(data_dir, m2, "_sos.json"));
  cert.host = h_poly(m2).with_vars(cert.ring);
  const CheckReport dec = verify_decomposition(*cert.host, cert.context_scale, cert.target);
  const CheckReport sos = verify_sos(cert);
  CheckReport rep;
  rep.name = "bracket_positivity.h" + std::to_string(m2);
  const bool ok = dec.status == Status::verified && sos.status == Status::verified;
  rep.status = ok ? Status::verified : (sos.status != Status::verified ? sos.status : dec.status);
  rep.residual = sos.residual;
  rep.witnesses = dec.witnesses;
  rep.witnesses.insert(rep.witnesses.end(), sos.witnesses.begin(), sos.witnesses.end());
  rep.details = {{"m2", m2},
                 {"scale", cert.context_scale.str()},
                 {"decomposition", to_string(dec.status)},
                 {"sos", to_string(sos.status)},
                 {"squares", cert.squares.size()}};
  if (sos.details.contains("strict_lower_bound")) {
    rep.details["strict_lower_bound"] = sos.details["strict_lower_bound"];
    rep.message = "nonnegative certified; strict via the constant square";
  }
  return rep;
}

CheckReport verify_g_against_appendix(const std::filesystem::path& data_dir) {
  const MultiPoly g = g_poly();
  const MultiPoly appendix = load_poly_json(data_dir / "g_appendix.json");
  CheckReport rep;
  rep.name = "g_appendix";
  bool even = true;
  for (const auto& [m, c] : g.terms()) even = even && all_even(m);
  const unsigned da = g.degree("a"), db = g.degree("b"), dc = g.degree("c");
  const bool degrees_ok = da <= 16 && db <= 16 && dc <= 18;
  const CheckReport nonneg = verify_nonneg_coeffs(g);
  const CheckReport nonneg_app = verify_nonneg_coeffs(appendix);
  const CheckReport prop = verify_proportional(appendix, g);
  const bool ok = even && degrees_ok && nonneg.status == Status::verified &&
                  nonneg_app.status == Status::verified && prop.status == Status::verified;
  rep.status = ok ? Status::verified
                  : (nonneg.status != Status::verified || nonneg_app.status != Status::verified
                         ? Status::coefficient_negative
                         : Status::residual_nonzero);
  rep.witnesses = prop.witnesses;
  rep.witnesses.insert(rep.witnesses.end(), nonneg.witnesses.begin(), nonneg.witnesses.end());
  rep.details = {{"terms", g.size()},
                 {"appendix_terms", appendix.size()},
                 {"even_exponents", even},
                 {"degrees", {da, db, dc}},
                 {"nonnegative", nonneg.status == Status::verified},
                 {"appendix_nonnegative", nonneg_app.status == Status::verified},
                 {"proportional", prop.status == Status::verified},
                 {"g_constant", g.constant_term().str()},
                 {"appendix_constant", appendix.constant_term().str()}};
  if (nonneg.details.contains("min_coefficient")) rep.details["min_coefficient"] = nonneg.details["min_coefficient"];
  if (nonneg_app.details.contains("min_coefficient"))
    rep.details["appendix_min_coefficient"] = nonneg_app.details["min_coefficient"];
  // scalar = appendix / g, so g = appendix / scalar.
  if (prop.details.contains("scalar")) rep.details["appendix_over_g"] = prop.details["scalar"];
  return rep;
}

}  // namespace gpiv
