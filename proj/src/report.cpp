#include "zetacert/report.hpp"

#include <cstdio>

#include "zetacert/errors.hpp"

namespace zetacert {

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["claim_id"] = r.claim_id;
  j["verdict"] = r.verdict == Verdict::Pass ? "pass" : "fail";
  j["worst_margin"] = r.worst_margin;
  j["worst_point"] = r.worst_point;
  j["samples"] = r.samples;
  j["residual_max"] = r.residual_max;
  j["parameters"] = r.parameters;
  return j;
}

nlohmann::json to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.claim_id = j.at("claim_id").get<std::string>();
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict == "pass") {
    r.verdict = Verdict::Pass;
  } else if (verdict == "fail") {
    r.verdict = Verdict::Fail;
  } else {
    throw DomainError("report_from_json: unknown verdict '" + verdict + "'");
  }
  r.worst_margin = j.at("worst_margin").get<double>();
  r.worst_point = j.at("worst_point").get<double>();
  r.samples = j.at("samples").get<int>();
  r.residual_max = j.at("residual_max").get<double>();
  r.parameters = j.at("parameters").get<std::map<std::string, double>>();
  return r;
}

std::vector<VerificationReport> reports_from_json(const nlohmann::json& j) {
  std::vector<VerificationReport> out;
  for (const auto& item : j) out.push_back(report_from_json(item));
  return out;
}

std::string summary_line(const VerificationReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s %s worst_margin=%.17g at x=%.17g",
                r.claim_id.c_str(), r.verdict == Verdict::Pass ? "PASS" : "FAIL",
                r.worst_margin, r.worst_point);
  return buf;
}

}  // namespace zetacert
