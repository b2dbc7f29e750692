#include "klab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace klab {

using nlohmann::json;

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Exhausted: return "EXHAUSTED";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Theorem: return "theorem";
    case Provenance::Derived: return "derived";
    case Provenance::Definition: return "definition";
    case Provenance::Conjecture: return "conjecture";
  }
  return "?";
}

VerificationReport judged(std::string claim_id, json parameters, json expected, Provenance provenance, json computed,
                          json evidence) {
  VerificationReport r;
  r.claim_id = std::move(claim_id);
  r.parameters = std::move(parameters);
  r.status = expected == computed ? Status::Pass : Status::Fail;
  r.expected = std::move(expected);
  r.provenance = provenance;
  r.computed = std::move(computed);
  r.evidence = std::move(evidence);
  return r;
}

VerificationReport exhausted_report(std::string claim_id, json parameters, json expected, Provenance provenance,
                                    json evidence) {
  VerificationReport r;
  r.claim_id = std::move(claim_id);
  r.parameters = std::move(parameters);
  r.expected = std::move(expected);
  r.provenance = provenance;
  r.computed = nullptr;
  r.status = Status::Exhausted;
  r.evidence = std::move(evidence);
  return r;
}

json to_json(const VerificationReport& r, bool with_timing) {
  json j;
  j["claim_id"] = r.claim_id;
  j["claim"] = claim_statement(r.claim_id);
  j["parameters"] = r.parameters;
  j["expected"] = {{"value", r.expected}, {"provenance", to_string(r.provenance)}};
  j["computed"] = r.computed;
  j["status"] = to_string(r.status);
  j["evidence"] = r.evidence;
  if (r.conjecture) j["conjecture"] = true;
  if (r.optional) j["optional"] = true;
  if (!r.note.empty()) j["note"] = r.note;
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

void sort_reports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
    return a.parameters.dump() < b.parameters.dump();
  });
}

json reports_to_json(const std::vector<VerificationReport>& reports, bool with_timing) {
  json rows = json::array();
  for (const auto& r : reports) rows.push_back(to_json(r, with_timing));
  std::map<std::string, int> tally;
  for (const auto& r : reports) tally[to_string(r.status)]++;
  return {{"reports", rows}, {"summary", tally}, {"exit_code", exit_code(reports)}};
}

std::string format_line(const VerificationReport& r) {
  std::ostringstream os;
  os << std::left << std::setw(13) << to_string(r.status) << std::setw(34) << r.claim_id << r.parameters.dump();
  if (r.status != Status::Pass) os << "  expected=" << r.expected.dump() << " computed=" << r.computed.dump();
  if (r.conjecture) os << "  [conjecture probe]";
  if (r.optional) os << "  [optional]";
  return os.str();
}

int exit_code(const std::vector<VerificationReport>& reports) {
  bool fail = false, exhausted = false;
  for (const auto& r : reports) {
    if (r.conjecture) continue;
    if (r.status == Status::Fail) fail = true;
    if (r.status == Status::Exhausted && !r.optional) exhausted = true;
  }
  return fail ? 2 : exhausted ? 3 : 0;
}

namespace {

const std::map<std::string, std::string>& claims() {
  static const std::map<std::string, std::string> table = {
      {"shift-characterisation",
       "For n > ks the shifts of KG(n,k)_{s-stab} are exactly the rotations r_i with i in {1..s-1} u {n-s+1..n-1}, "
       "plus the blocks {ms+r+1..(m+1)s-1} (m in 1..k-2, r = n-sk) when n <= (k+1)s-2."},
      {"reflexions-not-shifts", "For n >= ks+1 no reflexion of D_2n is a shift of KG(n,k)_{s-stab}."},
      {"rotation-witnesses", "Every rotation outside the predicted shift set has a constructed non-adjacent witness vertex."},
      {"vertex-count", "KG(ks+1,k)_{s-stab} has exactly ks+1 vertices."},
      {"gap-structure", "Every vertex of KG(ks+1,k)_{s-stab} has k-1 circular gaps equal to s and one equal to s+1."},
      {"circulant-isomorphism", "The explicit map is an isomorphism G(ks+1,k) -> KG(ks+1,k)_{s-stab}."},
      {"chi-exact", "The chromatic number equals its closed form."},
      {"chi-dense-plus-two", "The dense part of KG(2s+2,2)_{s-stab} plus {1,2+s} and {2,3+s} needs s+2 colours."},
      {"dense-part-structure",
       "In KG(2s+2,2)_{s-stab} the dense part and the clique part partition V, the clique part is complete, "
       "the dense part is isomorphic to Cay(Z_{2s+2},{+-1..+-(s-1),s+1}) and has independence number 2."},
      {"vertex-critical", "Vertex-criticality status: every single-vertex deletion lowers chi, or a witness keeps it."},
      {"core", "Core status decided by exhaustive endomorphism search."},
      {"hom-idempotent-circulant",
       "KG(ks+1,k)_{s-stab} is hom-idempotent: group addition carried through the circulant isomorphism maps the "
       "cartesian square to the graph."},
      {"shift-set", "The shift set S_G computed by brute force."},
      {"cayley-of-shifts", "Cay(D_2n, S_G) is two disjoint copies of C_n^{s-1}."},
      {"chi-forbids-hom", "chi(Cay(D_2n,S_G)) < chi(G), so G does not map to Cay(D_2n,S_G)."},
      {"no-hom-to-cayley", "Exhaustive search finds no homomorphism G -> Cay(D_2n,S_G)."},
      {"not-hom-idempotent-chain",
       "G is a core with no homomorphism to Cay(Aut(G),S_G); with the cited characterisation this rules out "
       "hom-idempotence (and weak hom-idempotence for chi-critical G). The quantified statement itself is not "
       "machine-checked."},
      {"square-to-self", "Direct search for a homomorphism from the cartesian square of G to G."},
      {"conjecture-chi", "Conjectured chi(KG(n,k)_{s-stab}) = n-(k-1)s for n > sk."},
      {"conjecture-not-hom-idempotent",
       "Conjectured non-hom-idempotence of KG(n,k)_{s-stab}; supported when G is a core and "
       "chi(Cay(D_2n,S_G)) < chi(G)."},
  };
  return table;
}

}  // namespace

std::string claim_statement(const std::string& claim_id) {
  auto it = claims().find(claim_id);
  return it == claims().end() ? std::string{} : it->second;
}

std::vector<std::string> known_claims() {
  std::vector<std::string> out;
  for (const auto& [k, v] : claims()) out.push_back(k);
  return out;
}

}  // namespace klab
