#include "klab/families.hpp"

#include <algorithm>
#include <set>

#include "klab/modular.hpp"

namespace klab {

namespace {

Graph disjointness_graph(std::vector<KSubset> vertices) {
  const int m = static_cast<int>(vertices.size());
  GraphBuilder b(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (!vertices[u].intersects(vertices[v])) b.add_edge(u, v);
  std::vector<VertexLabel> labels(vertices.begin(), vertices.end());
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

std::vector<VertexLabel> cyclic_labels(int n) {
  std::vector<VertexLabel> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.emplace_back(CyclicElem{i, n});
  return labels;
}

}  // namespace

Graph kneser(int n, int k) {
  if (k < 1 || n < 2 * k)
    throw construction_error("kneser(" + std::to_string(n) + "," + std::to_string(k) + ") requires k >= 1 and n >= 2k");
  return disjointness_graph(enumerate_subsets(n, k));
}

Graph stable_kneser(int n, int k, int s) {
  if (s < 2 || k < 2 || n < k * s)
    throw construction_error("stable_kneser(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(s) +
                             ") requires s,k >= 2 and n >= ks");
  return disjointness_graph(enumerate_stable_subsets(n, k, s));
}

Graph circulant(int n, const std::vector<int>& connection) {
  if (n < 1) throw construction_error("circulant needs n >= 1");
  std::set<int> conn(connection.begin(), connection.end());
  for (int x : conn) {
    if (x <= 0 || x >= n)
      throw construction_error("circulant(" + std::to_string(n) + "): connection element " + std::to_string(x) +
                               " outside 1..n-1");
    if (!conn.count(n - x))
      throw construction_error("circulant(" + std::to_string(n) + "): connection set not closed under negation (" +
                               std::to_string(x) + " without " + std::to_string(n - x) + ")");
  }
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (conn.count(v - u)) b.add_edge(u, v);
  b.set_labels(cyclic_labels(n));
  return std::move(b).build();
}

Graph circular_graph(int n, int k) {
  if (k < 1 || n < 2 * k)
    throw construction_error("circular_graph(" + std::to_string(n) + "," + std::to_string(k) +
                             ") requires k >= 1 and n >= 2k");
  std::vector<int> conn;
  for (int x = k; x <= n - k; ++x) conn.push_back(x);
  return circulant(n, conn);
}

Graph cycle_power(int n, int a) {
  if (a < 1 || n < 2 * a || n < 3)
    throw construction_error("cycle_power(" + std::to_string(n) + "," + std::to_string(a) +
                             ") requires a >= 1, n >= 3 and n >= 2a");
  return relabel(graph_power(cycle_graph(n), a), cyclic_labels(n));
}

Graph cayley_dihedral(int n, const std::vector<DihedralElement>& gens) {
  std::set<DihedralElement> g(gens.begin(), gens.end());
  for (const auto& e : g) {
    if (e.ambient() != n) throw construction_error("cayley_dihedral: generator " + e.to_string() + " has wrong ambient");
    if (e.is_identity()) throw construction_error("cayley_dihedral: generators must exclude the identity");
    if (!g.count(inverse(e)))
      throw construction_error("cayley_dihedral: generator set not closed under inverse (" + e.to_string() + ")");
  }
  auto elems = all_elements(n);
  const int m = static_cast<int>(elems.size());
  GraphBuilder b(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (g.count(compose(inverse(elems[u]), elems[v]))) b.add_edge(u, v);
  b.set_labels(std::vector<VertexLabel>(elems.begin(), elems.end()));
  return std::move(b).build();
}

std::map<KSubset, int> subset_index(const Graph& g) {
  std::map<KSubset, int> out;
  for (int v = 0; v < g.order() && g.has_labels(); ++v)
    if (auto s = g.label(v).subset()) out.emplace(*s, v);
  return out;
}

std::vector<KSubset> prop_iso_images(int k, int s) {
  if (k < 2 || s < 2) throw construction_error("prop_iso_map requires s,k >= 2");
  const int n = k * s + 1;
  std::vector<KSubset> out;
  out.reserve(n);
  for (int u = 0; u < k * s; ++u) {
    int j = u / k, i = u % k;
    std::vector<int> elems(k);
    for (int r = 1; r <= k; ++r) elems[r - 1] = (r <= k - i ? j + 1 : j + 2) + (r - 1) * s;
    out.emplace_back(std::move(elems), n);
  }
  std::vector<int> last;
  for (int r = 1; r <= k; ++r) last.push_back(r * s + 1);
  out.emplace_back(std::move(last), n);
  return out;
}

std::vector<int> prop_iso_map(int k, int s) {
  const int n = k * s + 1;
  Graph circ = circular_graph(n, k);
  Graph kg = stable_kneser(n, k, s);
  auto index = subset_index(kg);
  std::vector<int> f;
  for (const auto& v : prop_iso_images(k, s)) {
    auto it = index.find(v);
    if (it == index.end()) throw std::logic_error("prop_iso_map: image " + v.to_string() + " is not an s-stable vertex");
    f.push_back(it->second);
  }
  if (!check_isomorphism(circ, kg, f)) throw std::logic_error("prop_iso_map: map is not an isomorphism");
  return f;
}

std::vector<KSubset> circular_interval_images(int n, int k) {
  if (k < 1 || n < 2 * k) throw construction_error("embed_circular_in_kneser requires k >= 1 and n >= 2k");
  std::vector<KSubset> out;
  for (int u = 0; u < n; ++u) {
    std::vector<int> elems;
    for (int t = 1; t <= k; ++t) elems.push_back(mod_n(u + t, n));
    out.emplace_back(std::move(elems), n);
  }
  return out;
}

std::vector<int> embed_circular_in_kneser(int n, int k) {
  auto index = subset_index(kneser(n, k));
  std::vector<int> f;
  for (const auto& v : circular_interval_images(n, k)) f.push_back(index.at(v));
  return f;
}

PairPartition pair_partition(int s) {
  if (s < 2) throw construction_error("pair_partition requires s >= 2");
  const int n = 2 * s + 2;
  PairPartition p;
  for (int i = 1; i <= s + 2; ++i) p.dense.emplace_back(std::vector<int>{i, mod_n(i + s, n)}, n);
  for (int i = 1; i <= s; ++i) p.dense.emplace_back(std::vector<int>{i, mod_n(i + s + 2, n)}, n);
  for (int i = 1; i <= s + 1; ++i) p.clique.emplace_back(std::vector<int>{i, mod_n(i + s + 1, n)}, n);
  return p;
}

Graph dense_part_circulant(int s) {
  const int n = 2 * s + 2;
  std::vector<int> conn;
  for (int x = 1; x <= s - 1; ++x) {
    conn.push_back(x);
    conn.push_back(n - x);
  }
  conn.push_back(s + 1);
  return circulant(n, conn);
}

std::vector<KSubset> dense_part_images(int s) {
  const int n = 2 * s + 2;
  std::vector<KSubset> out;
  for (int u = 0; u < n; ++u) {
    if (u <= s + 1) out.emplace_back(std::vector<int>{u + 1, u + 1 + s}, n);
    else out.emplace_back(std::vector<int>{u - (s + 1), u + 1}, n);
  }
  return out;
}

}  // namespace klab
