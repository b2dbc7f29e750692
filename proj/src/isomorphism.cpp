#include <algorithm>
#include <map>

#include "klab/graph.hpp"

namespace klab {

bool check_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& f) {
  const int n = g.order();
  if (h.order() != n || static_cast<int>(f.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int x : f) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != h.adjacent(f[u], f[v])) return false;
  return true;
}

namespace {

// degree, triangles through the vertex, then counts of vertices at each distance (last = unreachable)
std::vector<int> profile(const Graph& g, int v, const std::vector<std::vector<int>>& dist) {
  std::vector<int> p{g.degree(v), 0};
  g.neighbours(v).for_each([&](std::size_t w) { p[1] += static_cast<int>(g.neighbours(w).intersection_count(g.neighbours(v))); });
  std::vector<int> by_distance(g.order() + 1, 0);
  for (int d : dist[v]) by_distance[d < 0 ? g.order() : d]++;
  p.insert(p.end(), by_distance.begin(), by_distance.end());
  return p;
}

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<std::vector<int>> dg, dh;
  std::vector<Bitset> candidates;  // per G vertex, H vertices with matching profile
  std::vector<int> order;
  std::vector<int> f;
  Bitset used_h;

  bool consistent(int v, int x) const {
    for (std::size_t i = 0; i < order.size() && f[order[i]] >= 0; ++i) {
      int w = order[i];
      if (dg[v][w] != dh[x][f[w]]) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    int v = order[depth];
    Bitset cand = candidates[v];
    cand.subtract(used_h);
    for (std::size_t x = cand.first(); x < cand.size(); x = cand.next(x + 1)) {
      if (!consistent(v, static_cast<int>(x))) continue;
      f[v] = static_cast<int>(x);
      used_h.set(x);
      if (extend(depth + 1)) return true;
      used_h.reset(x);
      f[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (h.order() != n || g.edge_count() != h.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<int>{};

  IsoSearch s{g, h, distance_matrix(g), distance_matrix(h), {}, {}, std::vector<int>(n, -1), Bitset(n)};
  std::vector<std::vector<int>> pg(n), ph(n);
  std::map<std::vector<int>, int> class_count;
  for (int v = 0; v < n; ++v) {
    pg[v] = profile(g, v, s.dg);
    ph[v] = profile(h, v, s.dh);
    class_count[pg[v]]++;
    class_count[ph[v]]--;
  }
  for (const auto& [p, c] : class_count)
    if (c != 0) return std::nullopt;

  s.candidates.assign(n, Bitset(n));
  for (int v = 0; v < n; ++v)
    for (int x = 0; x < n; ++x)
      if (pg[v] == ph[x]) s.candidates[v].set(x);

  // Static order: start from the smallest class, then keep growing along edges.
  std::vector<char> placed(n, 0);
  Bitset placed_set(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    std::size_t best_links = 0, best_cands = 0;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      std::size_t links = g.neighbours(v).intersection_count(placed_set);
      std::size_t cands = s.candidates[v].count();
      if (best < 0 || links > best_links || (links == best_links && cands < best_cands)) {
        best = v;
        best_links = links;
        best_cands = cands;
      }
    }
    placed[best] = 1;
    placed_set.set(best);
    s.order.push_back(best);
  }

  if (!s.extend(0)) return std::nullopt;
  if (!check_isomorphism(g, h, s.f)) throw std::logic_error("are_isomorphic produced a map that fails the checker");
  return s.f;
}

}  // namespace klab
