#include <algorithm>
#include <exception>

#include "klab/homsolver.hpp"

namespace klab {

bool verify_colouring(const Graph& g, const std::vector<int>& colouring, int colours) {
  if (static_cast<int>(colouring.size()) != g.order()) return false;
  for (int c : colouring)
    if (c < 0 || c >= colours) return false;
  for (auto [u, v] : g.edges())
    if (colouring[u] == colouring[v]) return false;
  return true;
}

namespace {

class Dsatur {
public:
  Dsatur(const Graph& g, BudgetMeter& meter) : g_(g), meter_(meter), n_(g.order()) {}

  // Greedy DSATUR; returns colour count and fills `out`.
  int greedy(std::vector<int>& out) {
    reset(n_ + 1);
    int used = 0;
    for (int step = 0; step < n_; ++step) {
      int v = pick();
      int c = 0;
      while (count_[v][c]) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    out = colour_;
    return used;
  }

  // Exact search below `upper`; `seed` is coloured 0..|seed|-1 first.
  bool exact(const std::vector<int>& seed, int lower, int upper, std::vector<int>& best) {
    reset(upper + 1);
    lower_ = lower;
    upper_ = upper;
    best_ = &best;
    for (int i = 0; i < static_cast<int>(seed.size()); ++i) assign(seed[i], i);
    return search(static_cast<int>(seed.size()), static_cast<int>(seed.size()));
  }
  int upper() const { return upper_; }

private:
  void reset(int width) {
    colour_.assign(n_, -1);
    sat_.assign(n_, 0);
    count_.assign(n_, std::vector<int>(width, 0));
  }

  int pick() const {
    int best = -1;
    for (int v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      if (best < 0 || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && g_.degree(v) > g_.degree(best))) best = v;
    }
    return best;
  }

  void assign(int v, int c) {
    colour_[v] = c;
    g_.neighbours(v).for_each([&](std::size_t w) {
      if (count_[w][c]++ == 0) ++sat_[w];
    });
  }
  void unassign(int v) {
    int c = colour_[v];
    colour_[v] = -1;
    g_.neighbours(v).for_each([&](std::size_t w) {
      if (--count_[w][c] == 0) --sat_[w];
    });
  }

  // false only on budget exhaustion
  bool search(int coloured, int used) {
    if (coloured == n_) {
      upper_ = used;
      *best_ = colour_;
      return true;
    }
    int v = pick();
    for (int c = 0; c <= used && c < upper_ - 1; ++c) {
      if (count_[v][c]) continue;
      if (!meter_.tick()) return false;
      assign(v, c);
      bool ok = search(coloured + 1, std::max(used, c + 1));
      unassign(v);
      if (!ok) return false;
      if (upper_ == lower_) return true;
    }
    return true;
  }

  const Graph& g_;
  BudgetMeter& meter_;
  int n_;
  std::vector<int> colour_, sat_;
  std::vector<std::vector<int>> count_;
  int lower_ = 0, upper_ = 0;
  std::vector<int>* best_ = nullptr;
};

}  // namespace

ChromaticResult chromatic_number(const Graph& g, const SearchBudget& budget) {
  ChromaticResult r;
  BudgetMeter meter(budget);
  if (g.order() == 0) return r;

  CliqueResult clique = clique_number(g, budget);
  r.clique = clique.witness;
  r.lower_bound = clique.size;

  Dsatur d(g, meter);
  std::vector<int> best;
  int upper = d.greedy(best);
  bool complete = true;
  if (upper > r.lower_bound) {
    complete = d.exact(r.clique, r.lower_bound, upper, best);
    upper = d.upper();
  }
  r.chi = upper;
  r.colouring = best;
  // any clique seeds the exact search soundly, so only the colouring search decides exactness
  r.status = complete || upper == r.lower_bound ? SearchStatus::Solved : SearchStatus::Exhausted;
  r.stats = {meter.nodes() + clique.nodes, meter.elapsed()};
  if (!verify_colouring(g, r.colouring, r.chi)) throw std::logic_error("chromatic_number: colouring fails verification");
  return r;
}

namespace {

CriticalityResult assemble(const Graph& g, const ChromaticResult& whole, std::vector<ChromaticResult> parts,
                           double seconds) {
  CriticalityResult r;
  r.chi = whole.chi;
  r.stats.nodes = whole.stats.nodes;
  bool exhausted = whole.status == SearchStatus::Exhausted;
  bool critical = true;
  for (int v = 0; v < g.order(); ++v) {
    const auto& p = parts[v];
    r.stats.nodes += p.stats.nodes;
    r.deleted_chi.push_back(p.chi);
    if (p.status == SearchStatus::Exhausted) {
      exhausted = true;
      continue;
    }
    if (!exhausted && p.chi != r.chi - 1 && p.chi != r.chi)
      throw std::logic_error("criticality audit: chi(G - v) outside {chi - 1, chi}");
    if (p.chi == r.chi) {
      critical = false;
      if (!r.witness) r.witness = v;
    }
  }
  r.status = exhausted ? SearchStatus::Exhausted : SearchStatus::Solved;
  r.critical = !exhausted && critical;
  r.stats.seconds = seconds;
  return r;
}

}  // namespace

CriticalityResult is_chi_critical_serial(const Graph& g, const SearchBudget& budget) {
  BudgetMeter clock(SearchBudget::unlimited());
  ChromaticResult whole = chromatic_number(g, budget);
  std::vector<ChromaticResult> parts;
  for (int v = 0; v < g.order(); ++v) parts.push_back(chromatic_number(delete_vertex(g, v), budget));
  return assemble(g, whole, std::move(parts), clock.elapsed());
}

CriticalityResult is_chi_critical(const Graph& g, const SearchBudget& budget) {
  BudgetMeter clock(SearchBudget::unlimited());
  ChromaticResult whole = chromatic_number(g, budget);
  const int n = g.order();
  std::vector<ChromaticResult> parts(n);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int v = 0; v < n; ++v) {
    try {
      parts[v] = chromatic_number(delete_vertex(g, v), budget);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return assemble(g, whole, std::move(parts), clock.elapsed());
}

}  // namespace klab
