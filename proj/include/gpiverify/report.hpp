#pragma once

// Verdicts shared by every verification routine, and their JSON form.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gpiverify/exactnum.hpp"
#include "gpiverify/polyring.hpp"

namespace gpiv {

enum class Status {
  verified,              // an exact identity or certificate checked out
  holds,                 // an inequality holds at the evaluated point(s)
  fails,                 // an inequality is violated
  residual_nonzero,      // an identity left a nonzero residual
  coefficient_negative,  // a coefficientwise positivity claim failed
  indeterminate,         // enclosures could not decide the sign
};

enum class Outcome { pass, fail, indeterminate };

std::string_view to_string(Status s);
std::string_view to_string(Outcome o);
Outcome outcome_of(Status s);

struct Witness {
  std::string where;
  std::string value;
};

struct CheckReport {
  std::string name;
  Status status = Status::indeterminate;
  std::string message;
  std::optional<BigRational> margin;
  std::optional<double> margin_float;
  std::optional<RationalInterval> enclosure;
  std::optional<MultiPoly> residual;
  std::vector<Witness> witnesses;
  /// Free-form structured detail (per-point results, parameters, scalars).
  nlohmann::json details = nlohmann::json::object();

  Outcome outcome() const { return outcome_of(status); }
};

nlohmann::json to_json(const CheckReport& r);

struct Summary {
  int pass = 0;
  int fail = 0;
  int indeterminate = 0;
};

Summary summarize(const std::vector<CheckReport>& checks);

/// Exit code for a set of checks: 0 all pass, 1 any failure, else 2 when
/// something stayed indeterminate.
int exit_code_for(const Summary& s);

}  // namespace gpiv
