#include <doctest.h>

#include <random>
#include <set>

#include "klab/families.hpp"
#include "klab/homsolver.hpp"
#include "oracles.hpp"

using namespace klab;

TEST_CASE("homomorphism basics") {
  CHECK(find_homomorphism(cycle_graph(6), complete_graph(2)).found());
  CHECK(find_homomorphism(cycle_graph(5), complete_graph(2)).status == Outcome::NotExists);
  CHECK(find_homomorphism(kneser(5, 2), complete_graph(3)).found());
  CHECK(find_homomorphism(complete_graph(4), kneser(5, 2)).status == Outcome::NotExists);
  CHECK(find_homomorphism(empty_graph(3), complete_graph(1)).found());
  auto r = find_homomorphism(circular_graph(7, 2), kneser(7, 2));
  REQUIRE(r.found());
  CHECK(r.hom->verified);
  CHECK(oracle::is_hom(circular_graph(7, 2), kneser(7, 2), r.hom->map));
}

TEST_CASE("homomorphism search agrees with brute force") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 2 + trial % 9, m = 2 + (trial / 3) % 6;
    Graph g = oracle::random_graph(rng, n, 0.45);
    Graph h = oracle::random_graph(rng, m, 0.6);
    for (bool sym : {true, false}) {
      auto r = find_homomorphism(g, h, SearchBudget::defaults(), HomOptions{sym});
      REQUIRE(r.status != Outcome::Exhausted);
      CHECK(r.found() == oracle::hom_exists(g, h));
      if (r.found()) CHECK(oracle::is_hom(g, h, r.hom->map));
    }
  }
}

TEST_CASE("symmetry pruning does not change answers on labelled targets") {
  std::vector<Graph> targets = {cycle_power(7, 2), circular_graph(9, 4), stable_kneser(7, 2, 2),
                                cayley_dihedral(6, {DihedralElement::rotation(1, 6), DihedralElement::rotation(5, 6)})};
  std::mt19937 rng(5);
  for (const auto& h : targets)
    for (int trial = 0; trial < 10; ++trial) {
      Graph g = oracle::random_graph(rng, 5 + trial % 4, 0.5);
      auto a = find_homomorphism(g, h, SearchBudget::defaults(), HomOptions{true});
      auto b = find_homomorphism(g, h, SearchBudget::defaults(), HomOptions{false});
      CHECK(a.found() == b.found());
      CHECK(a.found() == oracle::hom_exists(g, h));
    }
}

TEST_CASE("label automorphisms are automorphisms") {
  for (const Graph& h : {cycle_power(8, 2), stable_kneser(8, 2, 3), kneser(5, 2),
                         cayley_dihedral(8, {DihedralElement::rotation(1, 8), DihedralElement::rotation(7, 8)})}) {
    auto gens = label_automorphisms(h);
    CHECK_FALSE(gens.empty());
    for (const auto& p : gens) CHECK(check_isomorphism(h, h, p));
  }
  auto orbit = orbit_minima(4, {{1, 2, 3, 0}});
  CHECK(orbit == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("search reports exhaustion separately") {
  SearchBudget tiny{5, std::nullopt};
  auto r = find_homomorphism(kneser(7, 2), complete_graph(4), tiny);
  CHECK(r.status == Outcome::Exhausted);
  CHECK_FALSE(r.hom.has_value());
}

TEST_CASE("retractions fix the kept set") {
  Graph c6 = cycle_graph(6);
  auto r = find_retraction(c6, {0, 1});
  REQUIRE(r.found());
  CHECK(r.hom->map[0] == 0);
  CHECK(r.hom->map[1] == 1);
  for (int x : r.hom->map) CHECK((x == 0 || x == 1));
  CHECK(find_retraction(cycle_graph(5), {0, 1}).status == Outcome::NotExists);
}

TEST_CASE("chromatic numbers") {
  CHECK(chromatic_number(kneser(5, 2)).chi == 3);
  CHECK(chromatic_number(stable_kneser(6, 2, 2)).chi == 4);
  CHECK(chromatic_number(stable_kneser(7, 3, 2)).chi == 3);
  CHECK(chromatic_number(circular_graph(7, 2)).chi == 4);
  CHECK(chromatic_number(circular_graph(9, 4)).chi == 3);
  CHECK(chromatic_number(cycle_power(8, 2)).chi == 4);
  CHECK(chromatic_number(cycle_power(10, 2)).chi == 4);
  auto r = chromatic_number(stable_kneser(8, 2, 3));
  CHECK(r.chi == 5);
  CHECK(verify_colouring(stable_kneser(8, 2, 3), r.colouring, 5));
  CHECK(chromatic_number(empty_graph(0)).chi == 0);
  CHECK(chromatic_number(empty_graph(3)).chi == 1);
}

TEST_CASE("chromatic number agrees with brute force and with homs into complete graphs") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 1 + trial % 12;
    Graph g = oracle::random_graph(rng, n, 0.2 + 0.1 * (trial % 7));
    auto r = chromatic_number(g);
    REQUIRE(r.status == SearchStatus::Solved);
    CHECK(r.chi == oracle::chromatic_number(g));
    CHECK(verify_colouring(g, r.colouring, r.chi));
    CHECK(find_homomorphism(g, complete_graph(r.chi)).found());
    if (r.chi > 1) CHECK(find_homomorphism(g, complete_graph(r.chi - 1)).status == Outcome::NotExists);
  }
}

TEST_CASE("closed forms") {
  auto chi = [](const char* t) { return closed_form_chi(parse_family_spec(t)).value; };
  CHECK(chi("kneser:n=5,k=2") == 3);
  CHECK(chi("stable:n=7,k=3,s=2") == 3);
  CHECK(chi("circular:n=7,k=2") == 4);
  CHECK(chi("cyclepow:n=10,a=2") == 4);
  CHECK(chi("cyclepow:n=7,a=3") == 7);
  CHECK(chi("stable:n=7,k=2,s=3") == 4);
  CHECK(chi("stable:n=10,k=2,s=4") == 6);
  auto conj = closed_form_chi(parse_family_spec("stable:n=9,k=2,s=3"));
  CHECK(conj.conjectural);
  CHECK(conj.value == 6);
  CHECK_THROWS(closed_form_chi(parse_family_spec("circulant:n=8,conn=1,7")));
}

TEST_CASE("cores") {
  CHECK(is_core(complete_graph(5)).status == CoreStatus::Core);
  CHECK(is_core(kneser(5, 2)).status == CoreStatus::Core);
  CHECK(is_core(cycle_graph(5)).status == CoreStatus::Core);
  auto c6 = is_core(cycle_graph(6));
  CHECK(c6.status == CoreStatus::NotCore);
  REQUIRE(c6.witness.has_value());
  CHECK(oracle::is_hom(cycle_graph(6), cycle_graph(6), c6.witness->map));
  std::set<int> image(c6.witness->map.begin(), c6.witness->map.end());
  CHECK(image.size() < 6u);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = oracle::random_graph(rng, 3 + trial % 6, 0.5);
    CHECK((is_core(g).status == CoreStatus::Core) == oracle::is_core(g));
  }
}

TEST_CASE("vertex criticality, parallel and serial") {
  for (const Graph& g : {cycle_graph(5), stable_kneser(6, 2, 2), complete_graph(4), cycle_graph(6)}) {
    auto a = is_chi_critical(g);
    auto b = is_chi_critical_serial(g);
    CHECK(a.critical == b.critical);
    CHECK(a.deleted_chi == b.deleted_chi);
  }
  CHECK(is_chi_critical(cycle_graph(5)).critical);
  auto c6 = is_chi_critical(cycle_graph(6));
  CHECK_FALSE(c6.critical);
  CHECK(c6.witness == 0);
  auto pair = is_chi_critical(stable_kneser(8, 2, 3));
  CHECK_FALSE(pair.critical);
  REQUIRE(pair.witness.has_value());
  CHECK(pair.deleted_chi[*pair.witness] == 5);
}

TEST_CASE("constructive square homomorphisms") {
  Graph c = cycle_power(9, 2);
  auto h = normal_cayley_self_hom(c);
  CHECK(h.verified);
  CHECK(oracle::is_hom(cartesian_product(c, c), c, h.map));
  CHECK_THROWS(normal_cayley_self_hom(kneser(5, 2)));
  for (auto [k, s] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    auto sq = stable_kneser_square_hom(k, s);
    Graph g = stable_kneser(k * s + 1, k, s);
    CHECK(sq.verified);
    CHECK(oracle::is_hom(cartesian_product(g, g), g, sq.map));
  }
}
