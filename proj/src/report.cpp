#include "gpiverify/report.hpp"

namespace gpiv {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::residual_nonzero: return "residual_nonzero";
    case Status::coefficient_negative: return "coefficient_negative";
    case Status::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

Outcome outcome_of(Status s) {
  switch (s) {
    case Status::verified:
    case Status::holds: return Outcome::pass;
    case Status::indeterminate: return Outcome::indeterminate;
    default: return Outcome::fail;
  }
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["status"] = to_string(r.status);
  j["outcome"] = to_string(r.outcome());
  if (!r.message.empty()) j["message"] = r.message;
  if (r.margin) j["margin"] = r.margin->str();
  if (r.margin_float) j["margin_float"] = *r.margin_float;
  if (r.enclosure) j["enclosure"] = {r.enclosure->lo().str(), r.enclosure->hi().str()};
  if (r.residual) j["residual"] = poly_serialize(*r.residual);
  if (!r.witnesses.empty()) {
    auto& w = j["witnesses"] = nlohmann::json::array();
    for (const auto& x : r.witnesses) w.push_back({{"where", x.where}, {"value", x.value}});
  }
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

Summary summarize(const std::vector<CheckReport>& checks) {
  Summary s;
  for (const auto& c : checks) {
    switch (c.outcome()) {
      case Outcome::pass: ++s.pass; break;
      case Outcome::fail: ++s.fail; break;
      case Outcome::indeterminate: ++s.indeterminate; break;
    }
  }
  return s;
}

int exit_code_for(const Summary& s) {
  if (s.fail > 0) return 1;
  if (s.indeterminate > 0) return 2;
  return 0;
}

}  // namespace gpiv
