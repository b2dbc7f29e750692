#include <doctest.h>

#include <random>

#include "klab/families.hpp"
#include "klab/graph.hpp"
#include "oracles.hpp"

using namespace klab;

TEST_CASE("basic constructors") {
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(empty_graph(3).edge_count() == 0);
  CHECK_THROWS_AS(cycle_graph(2), construction_error);
  for (const Graph& g : {complete_graph(5), cycle_graph(7), path_graph(1), empty_graph(0)}) CHECK_NOTHROW(g.audit());
}

TEST_CASE("builder rejects loops, bad endpoints and duplicate labels") {
  GraphBuilder b(3);
  CHECK_THROWS(b.add_edge(1, 1));
  CHECK_THROWS(b.add_edge(0, 3));
  GraphBuilder c(2);
  c.set_labels({VertexLabel(IndexLabel{1}), VertexLabel(IndexLabel{1})});
  CHECK_THROWS(std::move(c).build());
}

TEST_CASE("complement and power") {
  Graph c5 = cycle_graph(5);
  CHECK(are_isomorphic(complement(c5), c5).has_value());
  CHECK(complement(complete_graph(4)).edge_count() == 0);
  CHECK(graph_power(cycle_graph(8), 2).edge_count() == 16);
  CHECK(graph_power(cycle_graph(6), 3) == complete_graph(6));
  CHECK(graph_power(path_graph(3), 1) == path_graph(3));
  CHECK_THROWS(graph_power(cycle_graph(5), 0));
}

TEST_CASE("cartesian product and disjoint union") {
  Graph k2 = complete_graph(2);
  Graph sq = cartesian_product(k2, k2);
  CHECK(sq.order() == 4);
  CHECK(are_isomorphic(sq, cycle_graph(4)).has_value());
  Graph p = cartesian_product(cycle_graph(3), path_graph(3));
  CHECK(p.edge_count() == 3 * 3 + 3 * 2);
  // (u,v) has index u*|H|+v
  CHECK(p.adjacent(0 * 3 + 1, 0 * 3 + 2));
  CHECK(p.adjacent(0 * 3 + 1, 2 * 3 + 1));
  CHECK_FALSE(p.adjacent(0, 4));
  CHECK_NOTHROW(p.audit());

  Graph u = disjoint_union(cycle_graph(4), complete_graph(3));
  CHECK(u.order() == 7);
  CHECK(u.edge_count() == 7);
  CHECK(component_count(u) == 2);
}

TEST_CASE("product of labelled graphs carries pair labels") {
  Graph c = cycle_power(5, 1);
  Graph sq = cartesian_product(c, c);
  REQUIRE(sq.has_labels());
  CHECK(sq.label(7).display() == "(1,2)");
  CHECK(sq.label(7).pair_parts() != nullptr);
  CHECK(VertexLabel::parse(sq.label(7).to_string()) == sq.label(7));
}

TEST_CASE("induced subgraph and vertex deletion") {
  Graph g = stable_kneser(8, 2, 3);
  auto index = subset_index(g);
  std::vector<int> t;
  for (const auto& v : pair_partition(3).clique) t.push_back(index.at(v));
  Graph k = induced_subgraph(g, t);
  CHECK(k == complete_graph(4));
  CHECK(k.label(0).display() == "{1,5}");

  Graph d = delete_vertex(cycle_graph(5), 0);
  CHECK(d == path_graph(4));
  CHECK_THROWS(induced_subgraph(g, {0, 99}));
}

TEST_CASE("labels round trip through text") {
  std::vector<VertexLabel> ls = {VertexLabel(KSubset({1, 4}, 6)), VertexLabel(DihedralElement::rho(2, 8)),
                                 VertexLabel(CyclicElem{3, 7}), VertexLabel(IndexLabel{5})};
  for (const auto& l : ls) CHECK(VertexLabel::parse(l.to_string()) == l);
  CHECK(ls[0].to_string() == "set:1,4/6");
  CHECK(ls[1].display() == "p2");
}

TEST_CASE("distances and components") {
  auto d = distance_matrix(cycle_graph(6));
  CHECK(d[0][3] == 3);
  CHECK(d[1][5] == 2);
  auto e = distance_matrix(empty_graph(2));
  CHECK(e[0][1] == -1);
  CHECK(component_count(empty_graph(4)) == 4);
}

TEST_CASE("isomorphism search") {
  Graph petersen = kneser(5, 2);
  CHECK(are_isomorphic(stable_kneser(5, 2, 2), cycle_graph(5)).has_value());
  CHECK(are_isomorphic(complement(stable_kneser(5, 2, 2)), cycle_graph(5)).has_value());
  CHECK_FALSE(are_isomorphic(petersen, graph_power(cycle_graph(10), 1)).has_value());
  CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))).has_value());
  auto f = are_isomorphic(circular_graph(7, 2), stable_kneser(7, 2, 3));
  REQUIRE(f.has_value());
  CHECK(check_isomorphism(circular_graph(7, 2), stable_kneser(7, 2, 3), *f));
  CHECK_FALSE(check_isomorphism(cycle_graph(4), cycle_graph(4), {0, 2, 1, 3}));
}

TEST_CASE("isomorphism agrees with random relabelling") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + trial % 8;
    Graph g = oracle::random_graph(rng, n, 0.4);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    Graph h = make_graph(n, edges);
    auto f = are_isomorphic(g, h);
    REQUIRE(f.has_value());
    CHECK(check_isomorphism(g, h, *f));
  }
}

TEST_CASE("clique and independence numbers match enumeration") {
  CHECK(clique_number(complete_graph(5)).size == 5);
  CHECK(independence_number(kneser(5, 2)).size == 4);
  CHECK(independence_number(stable_kneser(8, 2, 3)).size == oracle::independence_number(stable_kneser(8, 2, 3)));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 16;
    Graph g = oracle::random_graph(rng, n, 0.2 + 0.1 * (trial % 6));
    auto w = clique_number(g);
    auto a = independence_number(g);
    CHECK(w.size == oracle::clique_number(g));
    CHECK(a.size == oracle::independence_number(g));
    for (std::size_t i = 0; i < w.witness.size(); ++i)
      for (std::size_t j = i + 1; j < w.witness.size(); ++j) CHECK(g.adjacent(w.witness[i], w.witness[j]));
  }
}

TEST_CASE("clique search reports exhaustion") {
  SearchBudget tiny{1, std::nullopt};
  auto r = clique_number(kneser(8, 2), tiny);
  CHECK(r.status == SearchStatus::Exhausted);
}
