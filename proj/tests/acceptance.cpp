// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "klab/certificate.hpp"
#include "klab/dihedral.hpp"
#include "klab/families.hpp"
#include "klab/homsolver.hpp"
#include "oracles.hpp"

using namespace klab;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Check()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  try {
    c = body();
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  %2d  %-64s %7.2fs%s%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              c.detail.empty() ? "" : "  ", c.detail.c_str());
  std::fflush(stdout);
  failures += !c.ok;
}

template <class F>
void for_grid(F&& f) {
  for (int k = 2; k <= 4; ++k)
    for (int s = 2; s <= 4; ++s)
      for (int n = k * s + 1; n <= std::min((k + 2) * s, 16); ++n) f(n, k, s);
}

std::string cell(int n, int k, int s) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(s) + ")";
}

int chi(const Graph& g) {
  auto r = chromatic_number(g);
  return r.status == SearchStatus::Solved ? r.chi : -1;
}

}  // namespace

int main() {
  criterion(1, "shift sets: brute force = prediction on the (k,s) in {2,3,4}^2 grid", [] {
    Check c;
    int cells = 0;
    for_grid([&](int n, int k, int s) {
      Graph g = stable_kneser(n, k, s);
      ShiftSet brute = enumerate_shifts(g);
      c.require(brute.same_members(predicted_shifts(n, k, s)), "prediction differs at " + cell(n, k, s));
      std::set<std::pair<int, int>> images;
      for (const auto& e : brute.members) images.insert({e.apply(1), e.apply(2)});
      c.require(images == oracle::shift_images(n, k, s), "oracle differs at " + cell(n, k, s));
      ++cells;
    });
    c.require(cells == 40, "grid has " + std::to_string(cells) + " cells");
    return c;
  });

  criterion(2, "reflexions are never shifts, each with a verified witness", [] {
    Check c;
    for_grid([&](int n, int k, int s) {
      Graph g = stable_kneser(n, k, s);
      ShiftSet brute = enumerate_shifts(g);
      for (const auto& e : brute.members) c.require(e.is_rotation(), "reflexion shift at " + cell(n, k, s));
      auto index = subset_index(g);
      for (const auto& e : all_elements(n)) {
        if (e.is_rotation()) continue;
        KSubset v = non_shift_witness(e, n, k, s);
        std::vector<int> img;
        for (int x : v.elements()) img.push_back(e.apply(x));
        KSubset w(img, n);
        bool stable = true;
        for (int a : v.elements())
          for (int b : v.elements())
            if (a != b && oracle::circ_dist(a, b, n) < s) stable = false;
        c.require(stable && index.count(v) && index.count(w), "witness not a vertex at " + cell(n, k, s));
        c.require(v.intersects(w) && !g.adjacent(index.at(v), index.at(w)),
                  e.to_string() + " witness fails at " + cell(n, k, s));
      }
    });
    return c;
  });

  criterion(3, "|V(KG(ks+1,k)_s)| = ks+1 with gaps s^(k-1), s+1 for 2 <= k,s <= 5", [] {
    Check c;
    for (int k = 2; k <= 5; ++k)
      for (int s = 2; s <= 5; ++s) {
        const int n = k * s + 1;
        auto verts = enumerate_stable_subsets(n, k, s);
        c.require(static_cast<int>(verts.size()) == n, "count at " + cell(n, k, s));
        if (n <= 20)
          c.require(oracle::stable_masks(n, k, s).size() == static_cast<std::size_t>(n),
                    "oracle count at " + cell(n, k, s));
        for (const auto& v : verts) {
          const auto& el = v.elements();
          int at_s = 0, at_s1 = 0;
          for (int i = 0; i < k; ++i) {
            int gap = i + 1 < k ? el[i + 1] - el[i] : el[0] + n - el[k - 1];
            at_s += gap == s;
            at_s1 += gap == s + 1;
          }
          c.require(at_s == k - 1 && at_s1 == 1, "gaps of " + v.to_string() + " at " + cell(n, k, s));
        }
      }
    return c;
  });

  criterion(4, "explicit map G(ks+1,k) -> KG(ks+1,k)_s is an isomorphism, 2 <= k,s <= 4", [] {
    Check c;
    for (int k = 2; k <= 4; ++k)
      for (int s = 2; s <= 4; ++s) {
        const int n = k * s + 1;
        auto images = prop_iso_images(k, s);
        std::set<KSubset> distinct(images.begin(), images.end());
        c.require(static_cast<int>(distinct.size()) == n, "not injective at " + cell(n, k, s));
        for (const auto& v : images) c.require(is_s_stable(v, s), "image not stable at " + cell(n, k, s));
        for (int u = 0; u < n; ++u)
          for (int w = u + 1; w < n; ++w) {
            int d = (w - u) % n;
            bool circ_adj = d >= k && d <= n - k;
            c.require(circ_adj == !images[u].intersects(images[w]), "edge mismatch at " + cell(n, k, s));
          }
        c.require(are_isomorphic(circular_graph(n, k), stable_kneser(n, k, s)).has_value(),
                  "search disagrees at " + cell(n, k, s));
      }
    return c;
  });

  criterion(5, "exact chromatic numbers of the listed graphs", [] {
    Check c;
    const std::vector<std::pair<Graph, int>> cases = {
        {kneser(5, 2), 3},          {stable_kneser(6, 2, 2), 4}, {stable_kneser(7, 3, 2), 3},
        {circular_graph(7, 2), 4},  {circular_graph(9, 4), 3},   {cycle_power(8, 2), 4},
        {cycle_power(10, 2), 4},    {stable_kneser(8, 2, 3), 5}, {stable_kneser(10, 2, 4), 6}};
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const auto& [g, expected] = cases[i];
      auto r = chromatic_number(g);
      c.require(r.status == SearchStatus::Solved && r.chi == expected, "case " + std::to_string(i));
      c.require(oracle::colourable(g, expected) && !oracle::colourable(g, expected - 1),
                "oracle disagrees on case " + std::to_string(i));
    }
    return c;
  });

  criterion(6, "criticality of KG(6,2)_2, KG(7,3)_2 and non-criticality of KG(8,2)_3", [] {
    Check c;
    for (const Graph& g : {stable_kneser(6, 2, 2), stable_kneser(7, 3, 2)}) {
      auto r = is_chi_critical(g);
      c.require(r.status == SearchStatus::Solved && r.critical, "expected critical");
      for (int v = 0; v < g.order(); ++v)
        c.require(oracle::chromatic_number(oracle::without(g, v)) == r.chi - 1, "oracle deletion");
    }
    Graph pair = stable_kneser(8, 2, 3);
    auto r = is_chi_critical(pair);
    c.require(r.status == SearchStatus::Solved && !r.critical && r.witness.has_value(), "expected a witness");
    if (r.witness) c.require(oracle::chromatic_number(oracle::without(pair, *r.witness)) == 5, "witness keeps chi");
    return c;
  });

  criterion(7, "Petersen, KG(6,2)_2, KG(8,2)_3 are cores; C_6 is not", [] {
    Check c;
    for (const Graph& g : {kneser(5, 2), stable_kneser(6, 2, 2), stable_kneser(8, 2, 3)}) {
      c.require(is_core(g).status == CoreStatus::Core, "solver says not a core");
      c.require(oracle::is_core(g), "oracle says not a core");
    }
    Graph c6 = cycle_graph(6);
    auto r = is_core(c6);
    c.require(r.status == CoreStatus::NotCore && r.witness.has_value(), "C_6 verdict");
    if (r.witness) {
      std::set<int> image(r.witness->map.begin(), r.witness->map.end());
      c.require(oracle::is_hom(c6, c6, r.witness->map) && image.size() < 6u, "C_6 witness");
    }
    return c;
  });

  criterion(8, "verified homomorphisms KG(ks+1,k)_s^2 -> KG(ks+1,k)_s", [] {
    Check c;
    for (auto [k, s] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
      Graph g = stable_kneser(k * s + 1, k, s);
      auto h = stable_kneser_square_hom(k, s);
      c.require(h.verified && oracle::is_hom(cartesian_product(g, g), g, h.map),
                "square map at " + cell(k * s + 1, k, s));
    }
    return c;
  });

  criterion(9, "no homomorphism into Cay(D_2n, S_G) for KG(6,2)_2 and KG(8,2)_3", [] {
    Check c;
    {
      Graph g = stable_kneser(6, 2, 2);
      auto shifts = enumerate_shifts(g).members;
      c.require(shifts == std::vector<DihedralElement>{DihedralElement::rotation(1, 6), DihedralElement::rotation(5, 6)},
                "shifts of KG(6,2)_2");
      Graph cay = cayley_dihedral(6, shifts);
      c.require(are_isomorphic(cay, disjoint_union(cycle_graph(6), cycle_graph(6))).has_value(), "two hexagons");
      c.require(find_homomorphism(g, cay).status == Outcome::NotExists, "search found a map");
      c.require(!oracle::hom_exists(g, cay), "oracle found a map");
    }
    {
      Graph g = stable_kneser(8, 2, 3);
      auto shifts = enumerate_shifts(g).members;
      Graph cay = cayley_dihedral(8, shifts);
      c.require(are_isomorphic(cay, disjoint_union(cycle_power(8, 2), cycle_power(8, 2))).has_value(),
                "two copies of C_8^(2)");
      c.require(chi(cay) == 4 && chi(g) == 5, "chromatic comparison");
      c.require(find_homomorphism(g, cay).status == Outcome::NotExists, "search found a map");
      c.require(!oracle::hom_exists(g, cay), "oracle found a map");
      c.require(is_core(g).status == CoreStatus::Core, "core");
    }
    return c;
  });

  criterion(10, "solver cross-validation on random graphs", [] {
    Check c;
    std::mt19937 rng(20261017);
    std::uniform_int_distribution<int> order(1, 12);
    std::uniform_real_distribution<double> density(0.15, 0.8);
    int found = 0;
    for (int trial = 0; trial < 200; ++trial) {
      Graph g = oracle::random_graph(rng, order(rng), density(rng));
      Graph h = oracle::random_graph(rng, order(rng), density(rng));
      auto r = find_homomorphism(g, h);
      c.require(r.status != Outcome::Exhausted, "exhausted on trial " + std::to_string(trial));
      c.require(r.found() == oracle::hom_exists(g, h), "hom disagrees on trial " + std::to_string(trial));
      if (r.found()) {
        ++found;
        Certificate cert{"homomorphism", "g", "h", r.hom->map, {}, true, r.stats};
        c.require(recheck_certificate(certificate_from_json(to_json(cert)), g, &h), "certificate re-check");
      }
    }
    c.require(found > 20 && found < 180, "degenerate sample: " + std::to_string(found) + " found");
    std::uniform_int_distribution<int> big(1, 25);
    for (int trial = 0; trial < 60; ++trial) {
      Graph g = oracle::random_graph(rng, big(rng), density(rng));
      auto r = chromatic_number(g);
      c.require(r.status == SearchStatus::Solved, "chi exhausted");
      c.require(verify_colouring(g, r.colouring, r.chi), "colouring invalid");
      c.require(find_homomorphism(g, complete_graph(r.chi)).found(), "no hom to K_chi");
      if (r.chi > 1)
        c.require(find_homomorphism(g, complete_graph(r.chi - 1)).status == Outcome::NotExists, "hom to K_(chi-1)");
      Certificate cert{"coloring", "g", "colours:" + std::to_string(r.chi), r.colouring, {}, true, r.stats};
      c.require(recheck_certificate(cert, g, nullptr), "colouring certificate re-check");
    }
    return c;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
