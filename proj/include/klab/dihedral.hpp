#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klab/dihedral_element.hpp"
#include "klab/graph.hpp"
#include "klab/ksubset.hpp"

namespace klab {

// Elementwise image, re-sorted.
KSubset act_on_vertex(const DihedralElement& e, const KSubset& v);

// Vertex permutation of a subset-labelled graph induced by e. Throws std::logic_error if the
// image of some label is missing or the permutation fails to preserve edges and non-edges.
std::vector<int> induced_automorphism(const DihedralElement& e, const Graph& g);

struct ShiftCheck {
  bool shift = false;
  std::optional<int> witness;  // a vertex not adjacent to its image
};
ShiftCheck is_shift(const DihedralElement& e, const Graph& g);

enum class ShiftProvenance { BruteForce, LemmaFormula };

struct ShiftSet {
  int n = 0, k = 0, s = 0;
  std::vector<DihedralElement> members;  // sorted
  ShiftProvenance provenance = ShiftProvenance::BruteForce;

  std::string to_string() const;  // "{r1, r7}"
  std::vector<std::string> texts() const;
  const char* provenance_name() const { return provenance == ShiftProvenance::BruteForce ? "brute-force" : "lemma"; }
  bool same_members(const ShiftSet& o) const { return members == o.members; }
};

struct StableParameters {
  int n = 0, k = 0, s = 0;
};
// Reads n and k off the subset labels; s is the smallest circular gap over all vertices.
StableParameters stable_parameters(const Graph& g);

// Every element of D_2n tested with is_shift. The OpenMP kernel splits the 2n candidates
// across threads; the serial version is the reference it is tested against.
ShiftSet enumerate_shifts(const Graph& g);
ShiftSet enumerate_shifts_serial(const Graph& g);

// Rotations {1..s-1} u {n-s+1..n-1} when n >= (k+1)s - 1; for sk+1 <= n <= (k+1)s - 2 also
// the blocks {ms+r+1, ..., (m+1)s-1} for m in 1..k-2, r = n - sk. Rejects n <= sk.
ShiftSet predicted_shifts(int n, int k, int s);

// Constructed s-stable vertex v with v and e(v) intersecting, for e outside predicted_shifts.
// Throws std::invalid_argument if e is predicted to be a shift, std::logic_error if the
// construction does not witness.
KSubset non_shift_witness(const DihedralElement& e, int n, int k, int s);

}  // namespace klab
