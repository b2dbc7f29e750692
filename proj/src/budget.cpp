#include "klab/budget.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace klab {

SearchBudget SearchBudget::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw std::invalid_argument("budget must be \"<nodes>,<seconds>\", got '" + std::string(text) + "'");
  std::string nodes(text.substr(0, comma)), secs(text.substr(comma + 1));
  try {
    std::size_t used = 0;
    unsigned long long n = std::stoull(nodes, &used);
    if (used != nodes.size()) throw std::invalid_argument("trailing characters");
    double s = std::stod(secs, &used);
    if (used != secs.size() || s <= 0) throw std::invalid_argument("bad seconds");
    return {n, s};
  } catch (const std::exception&) {
    throw std::invalid_argument("budget must be \"<nodes>,<seconds>\", got '" + std::string(text) + "'");
  }
}

SearchBudget SearchBudget::from_environment() {
  if (const char* env = std::getenv("KNESER_LAB_BUDGET"); env && *env) return parse(env);
  return defaults();
}

}  // namespace klab
