#include "klab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

namespace klab {

// --- labels ---------------------------------------------------------------------------

VertexLabel VertexLabel::pair(VertexLabel a, VertexLabel b) {
  VertexLabel l;
  l.value = PairLabel{std::make_shared<const VertexLabel>(std::move(a)),
                      std::make_shared<const VertexLabel>(std::move(b))};
  return l;
}

std::string VertexLabel::to_string() const {
  if (auto s = subset()) {
    std::string out = "set:";
    for (std::size_t i = 0; i < s->elements().size(); ++i)
      out += (i ? "," : "") + std::to_string(s->elements()[i]);
    return out + "/" + std::to_string(s->ambient());
  }
  if (auto g = group_elem()) return "grp:" + g->to_string() + "/" + std::to_string(g->ambient());
  if (auto c = cyclic()) return "cyc:" + std::to_string(c->value) + "/" + std::to_string(c->n);
  if (auto p = pair_parts()) return "pair:(" + p->first->to_string() + ";" + p->second->to_string() + ")";
  return "idx:" + std::to_string(std::get<IndexLabel>(value).value);
}

std::string VertexLabel::display() const {
  if (auto s = subset()) return s->to_string();
  if (auto g = group_elem()) return g->to_string();
  if (auto c = cyclic()) return std::to_string(c->value);
  if (auto p = pair_parts()) return "(" + p->first->display() + "," + p->second->display() + ")";
  return std::to_string(std::get<IndexLabel>(value).value);
}

namespace {

int parse_int(std::string_view t) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    throw std::invalid_argument("bad integer '" + std::string(t) + "' in vertex label");
  return v;
}

std::pair<std::string_view, int> split_ambient(std::string_view body) {
  auto slash = body.rfind('/');
  if (slash == std::string_view::npos) throw std::invalid_argument("vertex label lacks '/n'");
  return {body.substr(0, slash), parse_int(body.substr(slash + 1))};
}

}  // namespace

VertexLabel VertexLabel::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("bad vertex label '" + std::string(text) + "'");
  auto tag = text.substr(0, colon);
  auto body = text.substr(colon + 1);
  if (tag == "set") {
    auto [list, n] = split_ambient(body);
    std::vector<int> elems;
    while (!list.empty()) {
      auto c = list.find(',');
      elems.push_back(parse_int(list.substr(0, c)));
      list = c == std::string_view::npos ? std::string_view{} : list.substr(c + 1);
    }
    return KSubset(std::move(elems), n);
  }
  if (tag == "grp") {
    auto [elem, n] = split_ambient(body);
    return DihedralElement::parse(elem, n);
  }
  if (tag == "cyc") {
    auto [v, n] = split_ambient(body);
    return CyclicElem{parse_int(v), n};
  }
  if (tag == "idx") return IndexLabel{parse_int(body)};
  if (tag == "pair") {
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
      throw std::invalid_argument("bad pair label '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      else if (body[i] == ')') --depth;
      else if (body[i] == ';' && depth == 0) return pair(parse(body.substr(0, i)), parse(body.substr(i + 1)));
    }
    throw std::invalid_argument("bad pair label '" + std::string(text) + "'");
  }
  throw std::invalid_argument("unknown vertex label tag '" + std::string(tag) + "'");
}

bool operator==(const VertexLabel& a, const VertexLabel& b) {
  if (a.value.index() != b.value.index()) return false;
  if (auto p = a.pair_parts()) {
    auto q = b.pair_parts();
    return *p->first == *q->first && *p->second == *q->second;
  }
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PairLabel>) return false;
        else return x == std::get<T>(b.value);
      },
      a.value);
}

bool operator<(const VertexLabel& a, const VertexLabel& b) {
  if (a.value.index() != b.value.index()) return a.value.index() < b.value.index();
  if (auto p = a.pair_parts()) {
    auto q = b.pair_parts();
    if (!(*p->first == *q->first)) return *p->first < *q->first;
    return *p->second < *q->second;
  }
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PairLabel>) return false;
        else return x < std::get<T>(b.value);
      },
      a.value);
}

// --- Graph ----------------------------------------------------------------------------

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (int u = 0; u < order(); ++u)
    for (std::size_t v = adj_[u].next(u + 1); v < adj_[u].size(); v = adj_[u].next(v + 1))
      out.emplace_back(u, static_cast<int>(v));
  return out;
}

std::optional<int> Graph::find_label(const VertexLabel& l) const {
  for (int v = 0; v < static_cast<int>(labels_.size()); ++v)
    if (labels_[v] == l) return v;
  return std::nullopt;
}

void Graph::audit() const {
  for (int u = 0; u < order(); ++u) {
    if (adj_[u].size() != static_cast<std::size_t>(order())) throw std::logic_error("graph audit: row size mismatch");
    if (adj_[u].test(u)) throw std::logic_error("graph audit: loop at vertex " + std::to_string(u));
    for (int v = 0; v < order(); ++v)
      if (adj_[u].test(v) != adj_[v].test(u))
        throw std::logic_error("graph audit: asymmetric pair " + std::to_string(u) + "," + std::to_string(v));
  }
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != order()) throw std::logic_error("graph audit: label count mismatch");
    std::set<std::string> seen;
    for (const auto& l : labels_)
      if (!seen.insert(l.to_string()).second) throw std::logic_error("graph audit: duplicate label " + l.to_string());
  }
}

GraphBuilder::GraphBuilder(int order) {
  if (order < 0) throw construction_error("graph order must be non-negative");
  adj_.assign(order, Bitset(order));
}

void GraphBuilder::add_edge(int u, int v) {
  const int n = static_cast<int>(adj_.size());
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw construction_error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for order " +
                             std::to_string(n));
  if (u == v) throw construction_error("self-loop at vertex " + std::to_string(u));
  adj_[u].set(v);
  adj_[v].set(u);
}

void GraphBuilder::set_labels(std::vector<VertexLabel> labels) {
  if (!labels.empty() && labels.size() != adj_.size())
    throw construction_error("label count " + std::to_string(labels.size()) + " does not match order " +
                             std::to_string(adj_.size()));
  labels_ = std::move(labels);
}

Graph GraphBuilder::build() && {
  Graph g;
  std::size_t degree_sum = 0;
  for (const auto& row : adj_) degree_sum += row.count();
  g.adj_ = std::move(adj_);
  g.edges_ = degree_sum / 2;
  g.labels_ = std::move(labels_);
  if (g.has_labels()) {
    std::set<std::string> seen;
    for (const auto& l : g.labels_)
      if (!seen.insert(l.to_string()).second) throw construction_error("duplicate vertex label " + l.to_string());
  }
  return g;
}

Graph make_graph(int order, const std::vector<Edge>& edges) { return make_graph(order, edges, {}); }

Graph make_graph(int order, const std::vector<Edge>& edges, std::vector<VertexLabel> labels) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw construction_error("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
  return std::move(b).build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return std::move(b).build();
}

Graph empty_graph(int n) { return std::move(GraphBuilder(n)).build(); }

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  b.set_labels(g.labels());
  return std::move(b).build();
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  std::vector<int> queue;
  queue.reserve(n);
  for (int s = 0; s < n; ++s) {
    auto& d = dist[s];
    d[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      g.neighbours(u).for_each([&](std::size_t v) {
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          queue.push_back(static_cast<int>(v));
        }
      });
    }
  }
  return dist;
}

int component_count(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  int components = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      g.neighbours(u).for_each([&](std::size_t v) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(static_cast<int>(v));
        }
      });
    }
  }
  return components;
}

Graph graph_power(const Graph& g, int p) {
  if (p < 1) throw construction_error("graph power exponent must be positive");
  auto dist = distance_matrix(g);
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (dist[u][v] >= 1 && dist[u][v] <= p) b.add_edge(u, v);
  b.set_labels(g.labels());
  return std::move(b).build();
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  GraphBuilder b(ng * nh);
  auto id = [nh](int u, int v) { return u * nh + v; };
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) {
      for (int v2 = v + 1; v2 < nh; ++v2)
        if (h.adjacent(v, v2)) b.add_edge(id(u, v), id(u, v2));
      for (int u2 = u + 1; u2 < ng; ++u2)
        if (g.adjacent(u, u2)) b.add_edge(id(u, v), id(u2, v));
    }
  std::vector<VertexLabel> labels;
  labels.reserve(ng * nh);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v)
      labels.push_back(VertexLabel::pair(g.has_labels() ? g.label(u) : VertexLabel(IndexLabel{u}),
                                         h.has_labels() ? h.label(v) : VertexLabel(IndexLabel{v})));
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.order();
  GraphBuilder b(ng + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(ng + u, ng + v);
  // Labels survive only if both sides have them and they stay distinct.
  if (g.has_labels() && h.has_labels()) {
    std::vector<VertexLabel> labels = g.labels();
    labels.insert(labels.end(), h.labels().begin(), h.labels().end());
    std::set<std::string> seen;
    bool distinct = true;
    for (const auto& l : labels) distinct = distinct && seen.insert(l.to_string()).second;
    if (distinct) b.set_labels(std::move(labels));
  }
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted)
    if (v < 0 || v >= g.order()) throw construction_error("induced_subgraph: vertex " + std::to_string(v) + " out of range");
  const int m = static_cast<int>(sorted.size());
  GraphBuilder b(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(sorted[i], sorted[j])) b.add_edge(i, j);
  if (g.has_labels()) {
    std::vector<VertexLabel> labels;
    labels.reserve(m);
    for (int v : sorted) labels.push_back(g.label(v));
    b.set_labels(std::move(labels));
  }
  return std::move(b).build();
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw construction_error("delete_vertex: vertex " + std::to_string(v) + " out of range");
  std::vector<int> keep;
  keep.reserve(g.order() - 1);
  for (int u = 0; u < g.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

Graph relabel(const Graph& g, std::vector<VertexLabel> labels) {
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

}  // namespace klab
