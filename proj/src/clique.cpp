#include <algorithm>

#include "klab/graph.hpp"

namespace klab {

namespace {

struct CliqueSearch {
  const Graph& g;
  BudgetMeter meter;
  std::vector<int> current, best;

  // Greedy sequential colouring of `p`; vertices come out in non-decreasing colour order.
  void colour_sort(const Bitset& p, std::vector<int>& order, std::vector<int>& bound) const {
    order.clear();
    bound.clear();
    Bitset uncoloured = p;
    int colour = 0;
    while (uncoloured.any()) {
      ++colour;
      Bitset q = uncoloured;
      while (q.any()) {
        int v = static_cast<int>(q.first());
        q.reset(v);
        q.subtract(g.neighbours(v));
        uncoloured.reset(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }

  bool expand(Bitset p) {
    std::vector<int> order, bound;
    colour_sort(p, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current.size() + bound[i] <= best.size()) return true;
      if (!meter.tick()) return false;
      int v = order[i];
      current.push_back(v);
      Bitset next = p & g.neighbours(v);
      if (next.none()) {
        if (current.size() > best.size()) best = current;
      } else if (!expand(next)) {
        return false;
      }
      current.pop_back();
      p.reset(v);
    }
    return true;
  }
};

}  // namespace

CliqueResult clique_number(const Graph& g, const SearchBudget& budget) {
  CliqueSearch s{g, BudgetMeter(budget), {}, {}};
  CliqueResult r;
  if (g.order() > 0) {
    bool done = s.expand(Bitset::full(g.order()));
    r.status = done ? SearchStatus::Solved : SearchStatus::Exhausted;
  }
  r.witness = s.best;
  std::sort(r.witness.begin(), r.witness.end());
  r.size = static_cast<int>(r.witness.size());
  r.nodes = s.meter.nodes();
  return r;
}

CliqueResult independence_number(const Graph& g, const SearchBudget& budget) {
  return clique_number(complement(g), budget);
}

}  // namespace klab
