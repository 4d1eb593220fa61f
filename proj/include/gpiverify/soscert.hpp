#pragma once

// Exact checking of weighted sum-of-squares certificates and of
// coefficientwise positivity.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpiverify/exactnum.hpp"
#include "gpiverify/polyring.hpp"
#include "gpiverify/report.hpp"

namespace gpiv {

/// Raised for structurally invalid certificates (for example lambda <= 0).
class MalformedCertificate : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct WeightedSquare {
  BigRational lambda;
  MultiPoly poly;
};

struct SosCertificate {
  std::vector<std::string> ring;
  MultiPoly target;
  std::vector<WeightedSquare> squares;
  /// Factor with which the target appears inside its host polynomial.
  BigRational context_scale = BigRational(1);
  /// Name of the host polynomial ("h1" ... "h7"), if any.
  std::string host_name;
  std::optional<MultiPoly> host;
  std::string source;
};

SosCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::json certificate_to_json(const SosCertificate& cert);
SosCertificate load_certificate(const std::filesystem::path& path);
void save_certificate(const SosCertificate& cert, const std::filesystem::path& path);

/// Reads a polynomial in the JSON form of poly_to_json.
MultiPoly load_poly_json(const std::filesystem::path& path);

/// Verified iff target - sum lambda_i p_i^2 is the zero polynomial. Throws
/// MalformedCertificate when some lambda <= 0.
CheckReport verify_sos(const SosCertificate& cert);

/// Verified iff every coefficient is >= 0; the offending monomials become
/// witnesses otherwise.
CheckReport verify_nonneg_coeffs(const MultiPoly& p);

/// Verified iff host - scale * target has nonnegative coefficients on
/// monomials with only even exponents, so that it is nonnegative on R^n.
CheckReport verify_decomposition(const MultiPoly& host, const BigRational& scale, const MultiPoly& target);

/// Proportionality of p to ref by a single positive rational: same support
/// and one common coefficient ratio p/ref. The ratio goes to details.scalar.
CheckReport verify_proportional(const MultiPoly& p, const MultiPoly& ref);

/// Directory holding certs/ and g_appendix.json; fixed at build time.
std::filesystem::path default_data_dir();

/// Regenerated h_poly(m2) against the bundled expansion certs/h<m2>.json.
CheckReport verify_h_expansion(long m2, const std::filesystem::path& data_dir);

/// h_poly(m2) = scale * bracket + rest with rest >= 0 coefficientwise, and
/// the bracket's certificate verifies. Strictness comes from a constant
/// square in the certificate.
CheckReport verify_bracket_positivity(long m2, const std::filesystem::path& data_dir);

/// g_poly() structure (even exponents, degree caps (16,16,18), nonnegative
/// coefficients) and proportionality to data_dir/g_appendix.json.
CheckReport verify_g_against_appendix(const std::filesystem::path& data_dir);

}  // namespace gpiv
