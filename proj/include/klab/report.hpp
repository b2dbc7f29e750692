#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace klab {

// Inconclusive appears only on conjecture probes.
enum class Status { Pass, Fail, Exhausted, Inconclusive };
const char* to_string(Status s);

// Where an expected value comes from.
enum class Provenance { Theorem, Derived, Definition, Conjecture };
const char* to_string(Provenance p);

struct VerificationReport {
  std::string claim_id;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json expected;
  Provenance provenance = Provenance::Theorem;
  nlohmann::json computed;
  Status status = Status::Fail;
  nlohmann::json evidence = nlohmann::json::object();
  double seconds = 0;
  bool conjecture = false;  // probe rows; never gate exit codes
  bool optional = false;    // may exhaust without affecting exit codes
  std::string note;
};

// Pass iff computed == expected; Fail otherwise.
VerificationReport judged(std::string claim_id, nlohmann::json parameters, nlohmann::json expected,
                          Provenance provenance, nlohmann::json computed, nlohmann::json evidence = nlohmann::json::object());
VerificationReport exhausted_report(std::string claim_id, nlohmann::json parameters, nlohmann::json expected,
                                    Provenance provenance, nlohmann::json evidence = nlohmann::json::object());

nlohmann::json to_json(const VerificationReport& r, bool with_timing = true);
// Sorted by claim id, then parameters.
void sort_reports(std::vector<VerificationReport>& reports);
nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports, bool with_timing = true);
std::string format_line(const VerificationReport& r);

// 0 all gating rows pass, 2 any gating Fail, 3 gating Exhausted without Fail.
int exit_code(const std::vector<VerificationReport>& reports);

// Bundled statement for each claim id; empty if unknown.
std::string claim_statement(const std::string& claim_id);
std::vector<std::string> known_claims();

}  // namespace klab
