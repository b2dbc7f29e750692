#pragma once

#include <compare>
#include <string>
#include <vector>

namespace klab {

// A k-subset of [n] with strictly ascending 1-based elements.
class KSubset {
public:
  KSubset() = default;
  // Sorts the input; throws std::invalid_argument on duplicates or out-of-range members.
  KSubset(std::vector<int> elements, int ambient);

  const std::vector<int>& elements() const { return elements_; }
  int ambient() const { return ambient_; }
  int k() const { return static_cast<int>(elements_.size()); }
  bool contains(int x) const;

  // Circular gaps l_1..l_k: consecutive differences, the last one wrapping through n.
  std::vector<int> gaps() const;
  bool intersects(const KSubset& other) const;

  std::string to_string() const;  // "{1,4}"

  friend bool operator==(const KSubset&, const KSubset&) = default;
  friend auto operator<=>(const KSubset& a, const KSubset& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    return a.elements_ <=> b.elements_;
  }

private:
  std::vector<int> elements_;
  int ambient_ = 0;
};

// True iff every pair i != j in v satisfies s <= |i-j| <= n-s.
bool is_s_stable(const KSubset& v, int s);

// All s-stable k-subsets of [n] in lexicographic order.
std::vector<KSubset> enumerate_stable_subsets(int n, int k, int s);

// All k-subsets of [n] in lexicographic order.
std::vector<KSubset> enumerate_subsets(int n, int k);

}  // namespace klab
