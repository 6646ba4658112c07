#ifndef ZETACERT_REPORT_HPP
#define ZETACERT_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "zetacert/verify.hpp"

namespace zetacert {

/// JSON object with keys exactly matching the VerificationReport field names
/// in lower_snake_case; floats carry full round-trip precision.
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const std::vector<VerificationReport>& reports);

VerificationReport report_from_json(const nlohmann::json& j);
std::vector<VerificationReport> reports_from_json(const nlohmann::json& j);

/// One-line summary: "<claim_id> <PASS|FAIL> worst_margin=<v> at x=<p>".
std::string summary_line(const VerificationReport& report);

}  // namespace zetacert

#endif
