#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "klab/bitset.hpp"
#include "klab/budget.hpp"
#include "klab/dihedral_element.hpp"
#include "klab/ksubset.hpp"

namespace klab {

class construction_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CyclicElem {
  int value = 0;  // residue 0..n-1
  int n = 0;
  friend auto operator<=>(const CyclicElem&, const CyclicElem&) = default;
};

struct IndexLabel {
  int value = 0;
  friend auto operator<=>(const IndexLabel&, const IndexLabel&) = default;
};

struct VertexLabel;

struct PairLabel {
  std::shared_ptr<const VertexLabel> first, second;
};

// Mathematical vertex name. Subset labels are 1-based and carry their ambient n.
struct VertexLabel {
  std::variant<KSubset, DihedralElement, CyclicElem, PairLabel, IndexLabel> value;

  VertexLabel() : value(IndexLabel{}) {}
  VertexLabel(KSubset v) : value(std::move(v)) {}
  VertexLabel(DihedralElement e) : value(e) {}
  VertexLabel(CyclicElem c) : value(c) {}
  VertexLabel(IndexLabel i) : value(i) {}
  static VertexLabel pair(VertexLabel a, VertexLabel b);

  const KSubset* subset() const { return std::get_if<KSubset>(&value); }
  const DihedralElement* group_elem() const { return std::get_if<DihedralElement>(&value); }
  const CyclicElem* cyclic() const { return std::get_if<CyclicElem>(&value); }
  const PairLabel* pair_parts() const { return std::get_if<PairLabel>(&value); }

  // "set:1,4/6", "grp:r1/8", "cyc:3/7", "idx:5", "pair:(<a>;<b>)"
  std::string to_string() const;
  // Human-facing form: "{1,4}", "r1", "3", "5", "(<a>,<b>)".
  std::string display() const;
  static VertexLabel parse(std::string_view text);

  friend bool operator==(const VertexLabel& a, const VertexLabel& b);
  friend bool operator<(const VertexLabel& a, const VertexLabel& b);
};

using Edge = std::pair<int, int>;

// Immutable finite simple graph with dense bit-vector adjacency. Vertices are 0..order-1.
class Graph {
public:
  Graph() = default;

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edges_; }
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].count()); }
  std::vector<Edge> edges() const;  // u < v, lexicographic

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<VertexLabel>& labels() const { return labels_; }
  const VertexLabel& label(int v) const { return labels_.at(v); }
  // Index of the vertex with this label, if any.
  std::optional<int> find_label(const VertexLabel& l) const;

  // Throws std::logic_error if symmetry, irreflexivity or label distinctness fail.
  void audit() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
  friend class GraphBuilder;
  std::vector<Bitset> adj_;
  std::size_t edges_ = 0;
  std::vector<VertexLabel> labels_;
};

// Mutable staging area; build() freezes it into a Graph.
class GraphBuilder {
public:
  explicit GraphBuilder(int order);
  void add_edge(int u, int v);  // rejects loops and out-of-range endpoints
  void set_labels(std::vector<VertexLabel> labels);
  Graph build() &&;

private:
  std::vector<Bitset> adj_;
  std::vector<VertexLabel> labels_;
};

Graph make_graph(int order, const std::vector<Edge>& edges);
Graph make_graph(int order, const std::vector<Edge>& edges, std::vector<VertexLabel> labels);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);

Graph complement(const Graph& g);
Graph graph_power(const Graph& g, int p);
// Vertex (u, v) gets index u * |H| + v.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
// Kept vertices are re-indexed in ascending original order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);
Graph delete_vertex(const Graph& g, int v);
// Same adjacency, new labels (empty clears them).
Graph relabel(const Graph& g, std::vector<VertexLabel> labels);

// All-pairs BFS distances; -1 marks unreachable pairs.
std::vector<std::vector<int>> distance_matrix(const Graph& g);
int component_count(const Graph& g);

// Independent two-way check: f bijective and u~v <=> f(u)~f(v).
bool check_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& f);
// Backtracking over degree/distance-profile classes. Returned maps pass check_isomorphism.
std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h);

// --- independence and clique numbers -------------------------------------------------

enum class SearchStatus { Solved, Exhausted };

struct CliqueResult {
  SearchStatus status = SearchStatus::Solved;
  int size = 0;              // best found; exact when Solved
  std::vector<int> witness;  // ascending vertex indices
  std::uint64_t nodes = 0;
};

// Branch and bound with a greedy-colouring bound.
CliqueResult clique_number(const Graph& g, const SearchBudget& budget = SearchBudget::defaults());
// Maximum clique of the complement.
CliqueResult independence_number(const Graph& g, const SearchBudget& budget = SearchBudget::defaults());

}  // namespace klab
