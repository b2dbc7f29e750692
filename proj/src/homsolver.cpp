#include "klab/homsolver.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "klab/dihedral.hpp"
#include "klab/families.hpp"
#include "klab/modular.hpp"

namespace klab {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Found: return "Found";
    case Outcome::NotExists: return "NotExists";
    case Outcome::Exhausted: return "Exhausted";
  }
  return "?";
}

const char* to_string(CoreStatus s) {
  switch (s) {
    case CoreStatus::Core: return "Core";
    case CoreStatus::NotCore: return "NotCore";
    case CoreStatus::Exhausted: return "Exhausted";
  }
  return "?";
}

bool verify_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != g.order()) return false;
  for (int x : map)
    if (x < 0 || x >= h.order()) return false;
  for (auto [u, v] : g.edges())
    if (!h.adjacent(map[u], map[v])) return false;
  return true;
}

// --- automorphisms from labels ---------------------------------------------------------

namespace {

std::optional<std::vector<int>> permutation_from(const Graph& h, auto&& image_label) {
  std::map<std::string, int> index;
  for (int v = 0; v < h.order(); ++v) index.emplace(h.label(v).to_string(), v);
  std::vector<int> perm(h.order());
  for (int v = 0; v < h.order(); ++v) {
    std::optional<VertexLabel> img = image_label(h.label(v));
    if (!img) return std::nullopt;
    auto it = index.find(img->to_string());
    if (it == index.end()) return std::nullopt;
    perm[v] = it->second;
  }
  if (!check_isomorphism(h, h, perm)) return std::nullopt;
  return perm;
}

}  // namespace

std::vector<std::vector<int>> label_automorphisms(const Graph& h) {
  std::vector<std::vector<int>> gens;
  const int n = h.order();
  if (n > 0 && h.has_labels()) {
    const VertexLabel& l0 = h.label(0);
    auto add = [&](auto&& f) {
      if (auto p = permutation_from(h, f)) gens.push_back(std::move(*p));
    };
    if (auto c = l0.cyclic()) {
      const int m = c->n;
      auto shift = [m](const VertexLabel& l) -> std::optional<VertexLabel> {
        auto x = l.cyclic();
        if (!x || x->n != m) return std::nullopt;
        return VertexLabel(CyclicElem{residue(x->value + 1, m), m});
      };
      auto negate = [m](const VertexLabel& l) -> std::optional<VertexLabel> {
        auto x = l.cyclic();
        if (!x || x->n != m) return std::nullopt;
        return VertexLabel(CyclicElem{residue(-x->value, m), m});
      };
      add(shift);
      add(negate);
    } else if (auto e = l0.group_elem(); e && e->ambient() >= 3) {
      const int m = e->ambient();
      for (auto left : {DihedralElement::rotation(1, m), DihedralElement::rho(1, m)}) {
        add([left, m](const VertexLabel& l) -> std::optional<VertexLabel> {
          auto x = l.group_elem();
          if (!x || x->ambient() != m) return std::nullopt;
          return VertexLabel(compose(left, *x));
        });
      }
    } else if (auto s = l0.subset(); s && s->ambient() >= 3) {
      const int m = s->ambient();
      for (auto act : {DihedralElement::rotation(1, m), DihedralElement::rho(1, m)}) {
        add([act, m](const VertexLabel& l) -> std::optional<VertexLabel> {
          auto x = l.subset();
          if (!x || x->ambient() != m) return std::nullopt;
          return VertexLabel(act_on_vertex(act, *x));
        });
      }
    }
  }
  // a and b are twins when N(a)-b = N(b)-a; swapping them is then an automorphism
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Bitset na = h.neighbours(a), nb = h.neighbours(b);
      na.reset(b);
      nb.reset(a);
      if (na == nb) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[a], perm[b]);
        gens.push_back(std::move(perm));
      }
    }
  return gens;
}

std::vector<int> orbit_minima(int order, const std::vector<std::vector<int>>& generators) {
  std::vector<int> parent(order);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : generators)
    for (int v = 0; v < order; ++v) {
      int a = find(v), b = find(p[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> out(order);
  for (int v = 0; v < order; ++v) out[v] = find(v);
  return out;
}

// --- homomorphism search ---------------------------------------------------------------

namespace {

class HomEngine {
public:
  HomEngine(const Graph& g, const Graph& h, const SearchBudget& budget) : g_(g), h_(h), meter_(budget) {}

  // Domains are copied per level; instances are desk-sized.
  SolveOutcome run(std::vector<Bitset> domains, const std::vector<int>* root_orbits) {
    root_orbits_ = root_orbits;
    SolveOutcome out;
    std::vector<int> queue(g_.order());
    std::iota(queue.begin(), queue.end(), 0);
    bool ok = propagate(domains, queue);
    if (ok) {
      assigned_.assign(g_.order(), -1);
      ok = search(domains, 0);
    }
    out.stats = {meter_.nodes(), meter_.elapsed()};
    if (meter_.exhausted()) {
      out.status = Outcome::Exhausted;
    } else if (ok) {
      out.status = Outcome::Found;
      out.hom = Homomorphism{g_.order(), h_.order(), assigned_, false};
    } else {
      out.status = Outcome::NotExists;
    }
    return out;
  }

private:
  bool propagate(std::vector<Bitset>& d, std::vector<int> queue) {
    std::vector<char> queued(g_.order(), 0);
    for (int v : queue) queued[v] = 1;
    Bitset support(h_.order());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int w = queue[head];
      queued[w] = 0;
      if (g_.neighbours(w).none()) continue;
      support.clear();
      d[w].for_each([&](std::size_t x) { support |= h_.neighbours(static_cast<int>(x)); });
      bool wiped = false;
      g_.neighbours(w).for_each([&](std::size_t zi) {
        if (wiped) return;
        int z = static_cast<int>(zi);
        Bitset next = d[z] & support;
        if (next == d[z]) return;
        if (next.none()) {
          wiped = true;
          return;
        }
        d[z] = std::move(next);
        if (!queued[z]) {
          queued[z] = 1;
          queue.push_back(z);
        }
      });
      if (wiped) return false;
    }
    return true;
  }

  bool search(const std::vector<Bitset>& d, int depth) {
    int var = -1;
    std::size_t best = 0;
    for (int v = 0; v < g_.order(); ++v) {
      if (assigned_[v] >= 0) continue;
      std::size_t c = d[v].count();
      if (var < 0 || c < best) {
        var = v;
        best = c;
      }
    }
    if (var < 0) return true;
    Bitset values = d[var];
    if (depth == 0 && root_orbits_) {
      Bitset reps(h_.order());
      values.for_each([&](std::size_t x) {
        if ((*root_orbits_)[x] == static_cast<int>(x) || !values.test((*root_orbits_)[x])) reps.set(x);
      });
      values = reps;
    }
    for (std::size_t x = values.first(); x < values.size(); x = values.next(x + 1)) {
      if (!meter_.tick()) return false;
      std::vector<Bitset> next = d;
      next[var].clear();
      next[var].set(x);
      assigned_[var] = static_cast<int>(x);
      if (propagate(next, {var}) && search(next, depth + 1)) return true;
      if (meter_.exhausted()) return false;
      assigned_[var] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  BudgetMeter meter_;
  std::vector<int> assigned_;
  const std::vector<int>* root_orbits_ = nullptr;
};

SolveOutcome finish(SolveOutcome out, const Graph& g, const Graph& h) {
  if (out.hom) {
    out.hom->verified = verify_homomorphism(g, h, out.hom->map);
    if (!out.hom->verified) throw std::logic_error("homomorphism search returned a map that fails verification");
  }
  return out;
}

}  // namespace

SolveOutcome find_homomorphism(const Graph& g, const Graph& h, const SearchBudget& budget, HomOptions options) {
  std::vector<Bitset> domains(g.order(), Bitset::full(h.order()));
  std::vector<int> orbits;
  if (options.use_symmetry && h.order() > 0) orbits = orbit_minima(h.order(), label_automorphisms(h));
  HomEngine engine(g, h, budget);
  return finish(engine.run(std::move(domains), orbits.empty() ? nullptr : &orbits), g, h);
}

SolveOutcome find_retraction(const Graph& g, const std::vector<int>& keep, const SearchBudget& budget) {
  Graph h = induced_subgraph(g, keep);
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Bitset> domains(g.order(), Bitset::full(h.order()));
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    domains[sorted[i]].clear();
    domains[sorted[i]].set(i);
  }
  HomEngine engine(g, h, budget);
  SolveOutcome out = finish(engine.run(std::move(domains), nullptr), g, h);
  if (out.hom) {
    Homomorphism& r = *out.hom;
    for (int& x : r.map) x = sorted[x];
    r.target_order = g.order();
    bool fixes = std::all_of(sorted.begin(), sorted.end(), [&](int u) { return r.map[u] == u; });
    r.verified = fixes && verify_homomorphism(g, g, r.map);
    if (!r.verified) throw std::logic_error("retraction search returned a map that fails verification");
  }
  return out;
}

// --- cores -----------------------------------------------------------------------------

CoreResult is_core(const Graph& g, const SearchBudget& budget) {
  CoreResult res;
  BudgetMeter clock(SearchBudget::unlimited());
  auto orbits = orbit_minima(g.order(), label_automorphisms(g));
  bool exhausted = false;
  for (int v = 0; v < g.order(); ++v) {
    if (orbits[v] != v) continue;
    Graph minus = delete_vertex(g, v);
    SolveOutcome o = find_homomorphism(g, minus, budget);
    res.stats.nodes += o.stats.nodes;
    if (o.status == Outcome::Exhausted) {
      exhausted = true;
    } else if (o.found()) {
      Homomorphism w{g.order(), g.order(), o.hom->map, false};
      for (int& x : w.map) x = x < v ? x : x + 1;
      w.verified = verify_homomorphism(g, g, w.map) &&
                   std::find(w.map.begin(), w.map.end(), v) == w.map.end();
      if (!w.verified) throw std::logic_error("is_core: endomorphism witness fails verification");
      res.status = CoreStatus::NotCore;
      res.witness = std::move(w);
      res.stats.seconds = clock.elapsed();
      return res;
    }
  }
  res.status = exhausted ? CoreStatus::Exhausted : CoreStatus::Core;
  res.stats.seconds = clock.elapsed();
  return res;
}

// --- hom-idempotence -------------------------------------------------------------------

Homomorphism normal_cayley_self_hom(const Graph& g) {
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    auto c = g.has_labels() ? g.label(v).cyclic() : nullptr;
    if (!c || c->n != n || c->value != v)
      throw std::invalid_argument("normal_cayley_self_hom: expected a circulant with cyclic labels");
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent((u + 1) % n, (v + 1) % n))
        throw std::invalid_argument("normal_cayley_self_hom: graph is not invariant under translation");
  Graph square = cartesian_product(g, g);
  Homomorphism h{n * n, n, std::vector<int>(n * n), false};
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) h.map[u * n + v] = (u + v) % n;
  h.verified = verify_homomorphism(square, g, h.map);
  if (!h.verified) throw std::logic_error("normal_cayley_self_hom: group addition failed verification");
  return h;
}

Homomorphism stable_kneser_square_hom(int k, int s) {
  const int n = k * s + 1;
  Graph kg = stable_kneser(n, k, s);
  std::vector<int> phi = prop_iso_map(k, s);
  std::vector<int> phi_inv(n);
  for (int u = 0; u < n; ++u) phi_inv[phi[u]] = u;
  Homomorphism add = normal_cayley_self_hom(circular_graph(n, k));
  Homomorphism h{n * n, n, std::vector<int>(n * n), false};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) h.map[a * n + b] = phi[add.map[phi_inv[a] * n + phi_inv[b]]];
  h.verified = verify_homomorphism(cartesian_product(kg, kg), kg, h.map);
  if (!h.verified) throw std::logic_error("stable_kneser_square_hom: transported map failed verification");
  return h;
}

// --- closed forms ----------------------------------------------------------------------

ChiFormula closed_form_chi(const FamilySpec& spec) {
  auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };
  if (auto k = std::get_if<KneserSpec>(&spec)) {
    if (k->k < 1 || k->n < 2 * k->k) throw std::invalid_argument("closed_form_chi: kneser requires n >= 2k");
    return {k->n - 2 * k->k + 2, false, "n-2k+2"};
  }
  if (auto c = std::get_if<CircularSpec>(&spec)) {
    if (c->k < 1 || c->n < 2 * c->k) throw std::invalid_argument("closed_form_chi: circular requires n >= 2k");
    return {ceil_div(c->n, c->k), false, "ceil(n/k)"};
  }
  if (auto c = std::get_if<CyclePowerSpec>(&spec)) {
    if (c->a < 1 || c->n < 2 * c->a) throw std::invalid_argument("closed_form_chi: cycle power requires n >= 2a");
    int q = c->n / (c->a + 1), r = c->n % (c->a + 1);
    if (q <= 0) throw std::invalid_argument("closed_form_chi: cycle power requires q > 0");
    return {c->a + 1 + ceil_div(r, q), false, "a+1+ceil(r/q)"};
  }
  if (auto st = std::get_if<StableKneserSpec>(&spec)) {
    const int n = st->n, k = st->k, s = st->s;
    if (s < 2 || k < 2 || n < k * s) throw std::invalid_argument("closed_form_chi: stable Kneser requires s,k >= 2, n >= ks");
    if (s == 2) return {n - 2 * k + 2, false, "n-2k+2"};
    if (n == k * s + 1) return {s + 1, false, "s+1"};
    if (k == 2 && n == 2 * s + 2) return {s + 2, false, "s+2"};
    if (n > k * s) return {n - (k - 1) * s, true, "n-(k-1)s"};
    throw std::invalid_argument("closed_form_chi: no formula for n = ks with s >= 3");
  }
  throw std::invalid_argument("closed_form_chi: no closed form for " + to_string(spec));
}

}  // namespace klab
