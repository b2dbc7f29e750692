#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

namespace klab {

// Limits for one exact search. Exhaustion is always reported as its own outcome.
struct SearchBudget {
  std::optional<std::uint64_t> node_limit;
  std::optional<double> time_limit;  // wall seconds

  static constexpr std::uint64_t default_nodes = 100'000'000;
  static constexpr double default_seconds = 300.0;

  static SearchBudget defaults() { return {default_nodes, default_seconds}; }
  static SearchBudget unlimited() { return {}; }
  // "<nodes>,<seconds>"; throws std::invalid_argument on malformed text.
  static SearchBudget parse(std::string_view text);
  // KNESER_LAB_BUDGET if set, otherwise defaults().
  static SearchBudget from_environment();
};

// Node/time accounting for one search.
class BudgetMeter {
public:
  explicit BudgetMeter(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  // Counts one node; false once the budget is spent.
  bool tick() {
    ++nodes_;
    if (budget_.node_limit && nodes_ > *budget_.node_limit) return exhaust();
    if (budget_.time_limit && (nodes_ & 1023) == 0 && elapsed() > *budget_.time_limit) return exhaust();
    return !exhausted_;
  }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  bool exhaust() {
    exhausted_ = true;
    return false;
  }
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace klab
