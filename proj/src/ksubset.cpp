#include "klab/ksubset.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace klab {

KSubset::KSubset(std::vector<int> elements, int ambient)
    : elements_(std::move(elements)), ambient_(ambient) {
  if (ambient_ < 1) throw std::invalid_argument("KSubset: ambient n must be positive");
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || elements_[i] > ambient_)
      throw std::invalid_argument("KSubset: element " + std::to_string(elements_[i]) +
                                  " outside [" + std::to_string(ambient_) + "]");
    if (i > 0 && elements_[i] == elements_[i - 1])
      throw std::invalid_argument("KSubset: duplicate element " + std::to_string(elements_[i]));
  }
}

bool KSubset::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::vector<int> KSubset::gaps() const {
  std::vector<int> out;
  if (elements_.empty()) return out;
  for (std::size_t i = 0; i + 1 < elements_.size(); ++i) out.push_back(elements_[i + 1] - elements_[i]);
  out.push_back(elements_.front() + ambient_ - elements_.back());
  return out;
}

bool KSubset::intersects(const KSubset& other) const {
  auto a = elements_.begin(), b = other.elements_.begin();
  while (a != elements_.end() && b != other.elements_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a;
    else ++b;
  }
  return false;
}

std::string KSubset::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
  os << '}';
  return os.str();
}

bool is_s_stable(const KSubset& v, int s) {
  const int n = v.ambient();
  const auto& e = v.elements();
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b) {
      int d = std::abs(e[a] - e[b]);
      if (d < s || d > n - s) return false;
    }
  return true;
}

namespace {

// Lexicographic generation; `admissible` prunes on the partial prefix.
template <class Pred>
void generate(int n, int k, std::vector<int>& prefix, std::vector<KSubset>& out, Pred&& admissible) {
  if (static_cast<int>(prefix.size()) == k) {
    out.emplace_back(prefix, n);
    return;
  }
  int start = prefix.empty() ? 1 : prefix.back() + 1;
  int remaining = k - static_cast<int>(prefix.size());
  for (int x = start; x <= n - remaining + 1; ++x) {
    if (!admissible(prefix, x)) continue;
    prefix.push_back(x);
    generate(n, k, prefix, out, admissible);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<KSubset> enumerate_subsets(int n, int k) {
  if (n < 1 || k < 0 || k > n) return {};
  std::vector<KSubset> out;
  std::vector<int> prefix;
  generate(n, k, prefix, out, [](const std::vector<int>&, int) { return true; });
  return out;
}

std::vector<KSubset> enumerate_stable_subsets(int n, int k, int s) {
  if (n < 1 || k < 0 || k > n) return {};
  std::vector<KSubset> out;
  std::vector<int> prefix;
  generate(n, k, prefix, out, [&](const std::vector<int>& p, int x) {
    if (p.empty()) return true;
    // the prefix is ascending, so only the neighbour and the wrap to the first element matter
    return x - p.back() >= s && p.front() + n - x >= s;
  });
  return out;
}

}  // namespace klab
