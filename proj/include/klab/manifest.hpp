#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace klab {

class manifest_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One manifest line: "<suite> <token>...", where tokens are either key=value or positional.
struct ManifestEntry {
  std::string suite;
  std::vector<std::string> positional;
  std::map<std::string, std::string> args;
  int line = 0;

  bool has(const std::string& key) const { return args.count(key) > 0; }
  const std::string& arg(const std::string& key) const;
  int int_arg(const std::string& key) const;
  int int_arg(const std::string& key, int fallback) const;
  std::vector<int> range_arg(const std::string& key) const;
};

struct SuiteManifest {
  std::vector<ManifestEntry> entries;
  std::vector<ManifestEntry> for_suite(const std::string& suite) const;
};

// '#' starts a comment; blank lines are skipped.
SuiteManifest parse_manifest(std::istream& is);
SuiteManifest load_manifest(const std::string& path);

// "2..5" -> {2,3,4,5}; "2,4,7" -> {2,4,7}; "3" -> {3}.
std::vector<int> parse_range(const std::string& text);

}  // namespace klab
