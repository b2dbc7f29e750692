#include "klab/manifest.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace klab {

namespace {

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw manifest_error("bad integer '" + s + "'");
  return v;
}

}  // namespace

std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    int lo = to_int(text.substr(0, dots)), hi = to_int(text.substr(dots + 2));
    if (hi < lo) throw manifest_error("empty range '" + text + "'");
    for (int x = lo; x <= hi; ++x) out.push_back(x);
    return out;
  }
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(to_int(tok));
  if (out.empty()) throw manifest_error("empty range '" + text + "'");
  return out;
}

const std::string& ManifestEntry::arg(const std::string& key) const {
  auto it = args.find(key);
  if (it == args.end())
    throw manifest_error("manifest line " + std::to_string(line) + ": " + suite + " needs '" + key + "='");
  return it->second;
}

int ManifestEntry::int_arg(const std::string& key) const {
  try {
    return to_int(arg(key));
  } catch (const manifest_error& e) {
    throw manifest_error("manifest line " + std::to_string(line) + ": " + e.what());
  }
}

int ManifestEntry::int_arg(const std::string& key, int fallback) const { return has(key) ? int_arg(key) : fallback; }

std::vector<int> ManifestEntry::range_arg(const std::string& key) const {
  try {
    return parse_range(arg(key));
  } catch (const manifest_error& e) {
    throw manifest_error("manifest line " + std::to_string(line) + ": " + e.what());
  }
}

std::vector<ManifestEntry> SuiteManifest::for_suite(const std::string& suite) const {
  std::vector<ManifestEntry> out;
  for (const auto& e : entries)
    if (e.suite == suite) out.push_back(e);
  return out;
}

SuiteManifest parse_manifest(std::istream& is) {
  SuiteManifest m;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    ManifestEntry e;
    e.line = lineno;
    if (!(ls >> e.suite)) continue;
    std::string tok;
    while (ls >> tok) {
      auto eq = tok.find('=');
      // family specs contain '=' after a ':' prefix, so they stay positional
      if (eq != std::string::npos && tok.find(':') == std::string::npos) {
        e.args[tok.substr(0, eq)] = tok.substr(eq + 1);
      } else {
        e.positional.push_back(tok);
      }
    }
    m.entries.push_back(std::move(e));
  }
  return m;
}

SuiteManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw manifest_error("cannot open suite manifest '" + path + "'");
  return parse_manifest(in);
}

}  // namespace klab
