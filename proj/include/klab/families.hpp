#pragma once

#include <map>
#include <vector>

#include "klab/dihedral_element.hpp"
#include "klab/graph.hpp"
#include "klab/ksubset.hpp"

namespace klab {

// Kneser graph KG(n,k): k-subsets of [n] in lexicographic order, joined when disjoint.
Graph kneser(int n, int k);
// Induced subgraph of kneser(n,k) on the s-stable k-subsets. Requires n >= ks and s,k >= 2.
Graph stable_kneser(int n, int k, int s);
// Cay(Z_n, {k,...,n-k}); vertex i carries CyclicElem{i,n}.
Graph circular_graph(int n, int k);
// a-th power of the n-cycle, CyclicElem labels. Requires n >= 2a.
Graph cycle_power(int n, int a);
// Cay(Z_n, connection). The connection set must avoid 0 and be closed under x -> n-x.
Graph circulant(int n, const std::vector<int>& connection);
// Cay(D_2n, gens) on all_elements(n) with GroupElem labels; u~v iff u^-1 v in gens.
Graph cayley_dihedral(int n, const std::vector<DihedralElement>& gens);

// Subset label -> vertex index for a subset-labelled graph.
std::map<KSubset, int> subset_index(const Graph& g);

// The explicit map from circular_graph(ks+1,k) onto the s-stable k-subsets of [ks+1]:
// u = jk+i (0 <= j < s, 0 <= i < k) goes to the set whose r-th element is j+1+(r-1)s for
// r <= k-i and j+2+(r-1)s afterwards; u = ks goes to {s+1, 2s+1, ..., ks+1}.
std::vector<KSubset> prop_iso_images(int k, int s);
// Same map as indices into stable_kneser(ks+1,k,s). Throws std::logic_error if the result
// is not an isomorphism.
std::vector<int> prop_iso_map(int k, int s);

// u -> {u+1, ..., u+k} modulo [n]: circular_graph(n,k) onto the circular intervals C(n,k).
std::vector<KSubset> circular_interval_images(int n, int k);
// Same map as indices into kneser(n,k).
std::vector<int> embed_circular_in_kneser(int n, int k);

// Vertex partition of KG(2s+2,2)_{s-stab}:
//   dense  = {{i,i+s} : i in [s+2]} u {{i,i+s+2} : i in [s]}
//   clique = {{i,i+s+1} : i in [s+1]}
// (indices modulo [2s+2]).
struct PairPartition {
  std::vector<KSubset> dense;
  std::vector<KSubset> clique;
};
PairPartition pair_partition(int s);

// Cay(Z_{2s+2}, {+-1,...,+-(s-1), s+1}) and its map onto the dense part:
// u -> {u+1, u+1+s} for u <= s+1, u -> {u-(s+1), u+1} otherwise.
Graph dense_part_circulant(int s);
std::vector<KSubset> dense_part_images(int s);

}  // namespace klab
