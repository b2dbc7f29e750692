#include "klab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "klab/certificate.hpp"
#include "klab/dihedral.hpp"
#include "klab/dimacs.hpp"
#include "klab/family_spec.hpp"
#include "klab/harness.hpp"

namespace klab {

namespace {

constexpr int kUsage = 64;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cmd_construct(const std::string& ref, const std::string& format, std::ostream& out) {
  Graph g = load_graph(ref);
  if (format == "dimacs") {
    write_dimacs(out, g, ref);
  } else if (format == "summary") {
    out << "graph: " << ref << "\norder: " << g.order() << "\nedges: " << g.edge_count() << "\n";
    if (g.has_labels() && g.order() <= 64)
      for (int v = 0; v < g.order(); ++v) out << "  " << v << " " << g.label(v).display() << "\n";
  } else {
    throw usage_error("--out must be dimacs or summary");
  }
  return 0;
}

int cmd_shifts(const std::string& spec_text, bool predict, std::ostream& out) {
  FamilySpec spec = parse_family_spec(spec_text);
  const auto* st = std::get_if<StableKneserSpec>(&spec);
  if (!st) throw usage_error("shifts needs a stable:n=..,k=..,s=.. spec");
  ShiftSet brute = enumerate_shifts(build(spec));
  out << "bruteforce: " << brute.to_string() << "\n";
  if (!predict) return 0;
  ShiftSet lemma = predicted_shifts(st->n, st->k, st->s);
  out << "lemma: " << lemma.to_string() << "\n";
  out << (brute.same_members(lemma) ? "agree" : "DISAGREE") << "\n";
  return brute.same_members(lemma) ? 0 : 2;
}

int cmd_chi(const std::string& ref, const SearchBudget& budget, std::ostream& out) {
  Graph g = load_graph(ref);
  ChromaticResult res = chromatic_number(g, budget);
  if (res.status == SearchStatus::Exhausted) {
    out << "chi: exhausted (" << res.lower_bound << " <= chi <= " << res.chi << ")\n";
    return 3;
  }
  out << "chi: " << res.chi << "\n";
  Certificate c{"coloring", ref, "colours:" + std::to_string(res.chi), res.colouring, {}, true, res.stats};
  out << to_json(c).dump(2) << "\n";
  if (looks_like_family_spec(ref)) {
    try {
      ChiFormula f = closed_form_chi(parse_family_spec(ref));
      out << "closed form: " << f.value << (f.conjectural ? " (conjectured)" : "") << "\n";
      if (!f.conjectural && f.value != res.chi) return 2;
    } catch (const std::invalid_argument&) {
    }
  }
  return 0;
}

int cmd_core(const std::string& ref, const SearchBudget& budget, std::ostream& out) {
  Graph g = load_graph(ref);
  CoreResult res = is_core(g, budget);
  out << "core: " << to_string(res.status) << "\n";
  if (res.witness) {
    Certificate c{"endomorphism", ref, ref, res.witness->map, {}, res.witness->verified, res.stats};
    out << to_json(c).dump(2) << "\n";
  }
  return res.status == CoreStatus::Exhausted ? 3 : 0;
}

int cmd_hom(const std::string& src, const std::string& dst, const SearchBudget& budget, std::ostream& out) {
  Graph g = load_graph(src);
  Graph h = load_graph(dst);
  SolveOutcome res = find_homomorphism(g, h, budget);
  out << "hom: " << to_string(res.status) << " (" << res.stats.nodes << " nodes)\n";
  if (res.hom) {
    Certificate c{"homomorphism", src, dst, res.hom->map, {}, res.hom->verified, res.stats};
    out << to_json(c).dump(2) << "\n";
  }
  return res.status == Outcome::Exhausted ? 3 : 0;
}

int cmd_iso(const std::string& a, const std::string& b, std::ostream& out) {
  Graph g = load_graph(a);
  Graph h = load_graph(b);
  auto f = are_isomorphic(g, h);
  out << "isomorphic: " << (f ? "yes" : "no") << "\n";
  if (f) out << to_json(Certificate{"isomorphism", a, b, *f, {}, true, {}}).dump(2) << "\n";
  return 0;
}

void print_reports(const std::vector<VerificationReport>& reports, std::ostream& out) {
  for (const auto& r : reports) out << format_line(r) << "\n";
  int pass = 0;
  for (const auto& r : reports) pass += r.status == Status::Pass;
  out << pass << "/" << reports.size() << " PASS, exit " << exit_code(reports) << "\n";
}

int write_json(const std::vector<VerificationReport>& reports, const std::string& path, bool timing) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << reports_to_json(reports, timing).dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& manifest_path, const std::string& json_path,
               bool timing, const SearchBudget& budget, std::ostream& out) {
  SuiteManifest manifest = load_manifest(manifest_path);
  std::vector<VerificationReport> reports;
  if (suite == "all") {
    reports = run_all(manifest, budget);
  } else {
    auto ids = suite_ids();
    if (suite != "probe" && std::find(ids.begin(), ids.end(), suite) == ids.end())
      throw usage_error("unknown suite '" + suite + "'");
    reports = run_suite(manifest, suite, budget);
  }
  print_reports(reports, out);
  if (!json_path.empty()) write_json(reports, json_path, timing);
  return exit_code(reports);
}

int cmd_probe(const std::vector<std::string>& tokens, const std::string& json_path, bool timing,
              const SearchBudget& budget, std::ostream& out) {
  std::map<std::string, std::vector<int>> ranges;
  for (const auto& t : tokens) {
    auto eq = t.find('=');
    if (eq == std::string::npos) throw usage_error("probe ranges look like n=9..11 k=2 s=3");
    ranges[t.substr(0, eq)] = parse_range(t.substr(eq + 1));
  }
  for (const char* key : {"n", "k", "s"})
    if (!ranges.count(key)) throw usage_error(std::string("probe needs ") + key + "=<range>");
  auto reports = probe_conjectures(ranges["n"], ranges["k"], ranges["s"], budget);
  print_reports(reports, out);
  if (!json_path.empty()) write_json(reports, json_path, timing);
  return exit_code(reports);
}

int cmd_recheck(const std::string& path, std::ostream& out) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  Certificate c = certificate_from_json(nlohmann::json::parse(is));
  bool ok = recheck_certificate(c);
  out << "recheck " << c.kind << ": " << (ok ? "valid" : "INVALID") << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"kneser_lab: stable Kneser graph experiments"};
  app.require_subcommand(1);
  std::string budget_text;
  app.add_option("--budget", budget_text, "search budget <nodes>,<seconds> (default: $KNESER_LAB_BUDGET or 1e8,300)");

  std::string a, b, format = "summary", json_path, manifest_path = KLAB_DEFAULT_MANIFEST;
  bool predict = false, no_timing = false;
  std::vector<std::string> tokens;

  auto* construct = app.add_subcommand("construct", "build a graph and print it");
  construct->add_option("graph", a)->required();
  construct->add_option("--out", format, "summary or dimacs");
  auto* shifts = app.add_subcommand("shifts", "enumerate the shifts of a stable Kneser graph");
  shifts->add_option("spec", a)->required();
  shifts->add_flag("--predict", predict, "also print the predicted shift set");
  auto* chi = app.add_subcommand("chi", "exact chromatic number with colouring certificate");
  chi->add_option("graph", a)->required();
  auto* core = app.add_subcommand("core", "decide whether a graph is a core");
  core->add_option("graph", a)->required();
  auto* hom = app.add_subcommand("hom", "search for a homomorphism");
  hom->add_option("source", a)->required();
  hom->add_option("target", b)->required();
  auto* iso = app.add_subcommand("iso", "test isomorphism");
  iso->add_option("first", a)->required();
  iso->add_option("second", b)->required();
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", a, "suite id or 'all'")->required();
  verify->add_option("--json", json_path, "write the JSON report here");
  verify->add_option("--manifest", manifest_path, "suite manifest");
  verify->add_flag("--no-timing", no_timing, "omit timing fields from JSON");
  auto* probe = app.add_subcommand("probe", "conjecture probes over n=.. k=.. s=.. ranges");
  probe->add_option("ranges", tokens)->required();
  probe->add_option("--json", json_path, "write the JSON report here");
  probe->add_flag("--no-timing", no_timing, "omit timing fields from JSON");
  auto* recheck = app.add_subcommand("recheck", "re-verify a certificate JSON file");
  recheck->add_option("certificate", a)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    SearchBudget budget = budget_text.empty() ? SearchBudget::from_environment() : SearchBudget::parse(budget_text);
    if (construct->parsed()) return cmd_construct(a, format, out);
    if (shifts->parsed()) return cmd_shifts(a, predict, out);
    if (chi->parsed()) return cmd_chi(a, budget, out);
    if (core->parsed()) return cmd_core(a, budget, out);
    if (hom->parsed()) return cmd_hom(a, b, budget, out);
    if (iso->parsed()) return cmd_iso(a, b, out);
    if (verify->parsed()) return cmd_verify(a, manifest_path, json_path, !no_timing, budget, out);
    if (probe->parsed()) return cmd_probe(tokens, json_path, !no_timing, budget, out);
    if (recheck->parsed()) return cmd_recheck(a, out);
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}

int cli_main(int argc, const char* const* argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace klab
