#include <doctest.h>

#include <set>

#include "klab/dihedral.hpp"
#include "klab/families.hpp"
#include "oracles.hpp"

using namespace klab;

TEST_CASE("dihedral elements act as described") {
  auto r = DihedralElement::rotation(3, 8);
  CHECK(r.apply(7) == 2);
  CHECK(r.apply(5) == 8);
  auto p = DihedralElement::rho(2, 8);
  CHECK(p.apply(2) == 2);
  CHECK(p.apply(6) == 6);
  CHECK(p.apply(1) == 3);
  auto d = DihedralElement::delta(1, 8);
  CHECK(d.apply(1) == 8);
  CHECK(d.apply(2) == 7);
  for (int x = 1; x <= 8; ++x) CHECK(d.apply(x) != x);
  CHECK_THROWS(DihedralElement::delta(1, 7));
  CHECK_THROWS(DihedralElement::rho(5, 8));
  CHECK_THROWS(DihedralElement(DihedralKind::Rotation, 8, 8));
  CHECK(DihedralElement::rotation(8, 8).is_identity());
}

TEST_CASE("all elements are distinct permutations matching the oracle") {
  for (int n = 3; n <= 12; ++n) {
    auto es = all_elements(n);
    CHECK(es.size() == static_cast<std::size_t>(2 * n));
    std::set<std::vector<int>> perms, ref;
    for (const auto& e : es) perms.insert(e.permutation());
    for (const auto& p : oracle::dihedral_perms(n)) ref.insert(std::vector<int>(p.begin() + 1, p.end()));
    CHECK(perms == ref);
  }
}

TEST_CASE("text form round trips") {
  for (int n : {7, 8})
    for (const auto& e : all_elements(n)) CHECK(DihedralElement::parse(e.to_string(), n) == e);
  CHECK_THROWS(DihedralElement::parse("x1", 8));
  CHECK_THROWS(DihedralElement::parse("d1", 7));
}

TEST_CASE("composition, inverses and the closed-form product") {
  for (int n = 3; n <= 10; ++n) {
    auto es = all_elements(n);
    for (const auto& a : es) {
      CHECK(compose(a, inverse(a)).is_identity());
      for (const auto& b : es) {
        auto ab = compose(a, b);
        for (int x = 1; x <= n; ++x) CHECK(ab.apply(x) == a.apply(b.apply(x)));
      }
    }
    for (int j = 0; j < n; ++j) {
      int rho_count = n % 2 ? n : n / 2;
      for (int i = 1; i <= rho_count; ++i)
        CHECK(rotation_times_rho(j, i, n) ==
              compose(DihedralElement::rotation(j, n), DihedralElement::rho(i, n)));
    }
  }
}

TEST_CASE("rotations form a cyclic subgroup of order n") {
  const int n = 7;
  auto r1 = DihedralElement::rotation(1, n);
  auto x = r1;
  int order = 1;
  while (!x.is_identity()) {
    x = compose(x, r1);
    ++order;
  }
  CHECK(order == n);
}

TEST_CASE("induced automorphisms") {
  Graph g = stable_kneser(6, 2, 2);
  for (const auto& e : all_elements(6)) {
    auto f = induced_automorphism(e, g);
    CHECK(check_isomorphism(g, g, f));
  }
  // no automorphism sends {1,3} to {1,4}
  auto index = subset_index(g);
  int a = index.at(KSubset({1, 3}, 6)), b = index.at(KSubset({1, 4}, 6));
  for (const auto& e : all_elements(6)) CHECK(induced_automorphism(e, g)[a] != b);
}

TEST_CASE("is_shift returns a witness") {
  Graph g = stable_kneser(8, 2, 3);
  CHECK(is_shift(DihedralElement::rotation(2, 8), g).shift);
  auto c = is_shift(DihedralElement::rotation(3, 8), g);
  CHECK_FALSE(c.shift);
  REQUIRE(c.witness.has_value());
  auto v = *g.label(*c.witness).subset();
  CHECK(v.intersects(act_on_vertex(DihedralElement::rotation(3, 8), v)));
}

TEST_CASE("stable parameters read off the labels") {
  auto p = stable_parameters(stable_kneser(10, 3, 3));
  CHECK(p.n == 10);
  CHECK(p.k == 3);
  CHECK(p.s == 3);
}

TEST_CASE("shift enumeration matches the dihedral brute force and the prediction") {
  for (int k = 2; k <= 4; ++k)
    for (int s = 2; s <= 4; ++s)
      for (int n = k * s + 1; n <= std::min((k + 2) * s, 16); ++n) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(s);
        Graph g = stable_kneser(n, k, s);
        ShiftSet brute = enumerate_shifts(g);
        ShiftSet serial = enumerate_shifts_serial(g);
        CHECK(brute.same_members(serial));
        std::set<std::pair<int, int>> mine;
        for (const auto& e : brute.members) mine.insert({e.apply(1), e.apply(2)});
        CHECK(mine == oracle::shift_images(n, k, s));
        CHECK(predicted_shifts(n, k, s).same_members(brute));
      }
}

TEST_CASE("shift set examples") {
  CHECK(predicted_shifts(8, 2, 2).to_string() == "{r1, r7}");
  CHECK(predicted_shifts(10, 3, 3).to_string() == "{r1, r2, r5, r8, r9}");
  CHECK(predicted_shifts(7, 2, 3).members.size() == 4);
  CHECK(predicted_shifts(8, 2, 3).provenance_name() == std::string("lemma"));
  CHECK_THROWS(predicted_shifts(6, 2, 3));
}

TEST_CASE("non-shift witnesses are valid vertices meeting their image") {
  for (int k = 2; k <= 4; ++k)
    for (int s = 2; s <= 4; ++s)
      for (int n = k * s + 1; n <= std::min((k + 2) * s, 16); ++n) {
        auto shifts = predicted_shifts(n, k, s);
        for (const auto& e : all_elements(n)) {
          bool predicted = std::find(shifts.members.begin(), shifts.members.end(), e) != shifts.members.end();
          if (predicted || e.is_identity()) {
            CHECK_THROWS_AS(non_shift_witness(e, n, k, s), std::invalid_argument);
            continue;
          }
          CAPTURE(e.to_string());
          KSubset v = non_shift_witness(e, n, k, s);
          CHECK(v.k() == k);
          CHECK(is_s_stable(v, s));
          CHECK(v.intersects(act_on_vertex(e, v)));
        }
      }
}

TEST_CASE("reflexion witness shapes") {
  // rho_i: {i-s, i, i+s, ..., i+(k-2)s}
  CHECK(non_shift_witness(DihedralElement::rho(1, 8), 8, 2, 3) == KSubset({6, 1}, 8));
  CHECK(non_shift_witness(DihedralElement::rho(5, 9), 9, 2, 4) == KSubset({1, 5}, 9));
  // delta_i for k >= 3: {i, i+s, ..., i+(k-2)s, i-s-1}
  CHECK(non_shift_witness(DihedralElement::delta(2, 10), 10, 3, 3) == KSubset({2, 5, 8}, 10));
  // k = 2: {i+t, i-1-t} with t = s/2 is mapped onto itself
  auto d = DihedralElement::delta(1, 8);
  KSubset v = non_shift_witness(d, 8, 2, 3);
  CHECK(v == KSubset({2, 7}, 8));
  CHECK(act_on_vertex(d, v) == v);
}
