#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "klab/budget.hpp"
#include "klab/family_spec.hpp"
#include "klab/graph.hpp"

namespace klab {

// Vertex map G -> H. `verified` is set only by verify_homomorphism-based checks.
struct Homomorphism {
  int source_order = 0;
  int target_order = 0;
  std::vector<int> map;
  bool verified = false;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0;
};

enum class Outcome { Found, NotExists, Exhausted };
const char* to_string(Outcome o);

// NotExists only after a complete search; Found only with a verified map.
struct SolveOutcome {
  Outcome status = Outcome::NotExists;
  std::optional<Homomorphism> hom;
  SearchStats stats;

  bool found() const { return status == Outcome::Found; }
};

struct HomOptions {
  // Canonicalise the root assignment under automorphisms of H read off its labels
  // (each candidate generator is checked before use).
  bool use_symmetry = true;
};

// Every edge of g lands on an edge of h.
bool verify_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& map);

// Backtracking with arc consistency; most-constrained variable first (ties: lowest index),
// values ascending. Deterministic for identical inputs.
SolveOutcome find_homomorphism(const Graph& g, const Graph& h, const SearchBudget& budget = SearchBudget::defaults(),
                               HomOptions options = {});

// Homomorphisms g -> g[keep] fixing keep pointwise. The returned map is in g's indexing.
SolveOutcome find_retraction(const Graph& g, const std::vector<int>& keep,
                             const SearchBudget& budget = SearchBudget::defaults());

// Permutations of V(h) derived from its labels (cyclic translation/negation, dihedral left
// multiplication, dihedral action on subsets) plus twin transpositions, each confirmed to
// be an automorphism.
std::vector<std::vector<int>> label_automorphisms(const Graph& h);
// orbit[v] = smallest vertex in v's orbit under the given permutations.
std::vector<int> orbit_minima(int order, const std::vector<std::vector<int>>& generators);

// --- colouring -------------------------------------------------------------------------

bool verify_colouring(const Graph& g, const std::vector<int>& colouring, int colours);

struct ChromaticResult {
  SearchStatus status = SearchStatus::Solved;
  int chi = 0;                  // exact when Solved, best upper bound otherwise
  int lower_bound = 0;          // clique size
  std::vector<int> colouring;   // proper, uses chi colours
  std::vector<int> clique;      // witness for lower_bound
  SearchStats stats;
};

// Exact DSATUR branch and bound seeded with a maximum clique and a greedy colouring.
ChromaticResult chromatic_number(const Graph& g, const SearchBudget& budget = SearchBudget::defaults());

// --- cores, criticality ----------------------------------------------------------------

enum class CoreStatus { Core, NotCore, Exhausted };
const char* to_string(CoreStatus s);

struct CoreResult {
  CoreStatus status = CoreStatus::Core;
  std::optional<Homomorphism> witness;  // non-surjective endomorphism when NotCore
  SearchStats stats;
};

// For one vertex v per automorphism orbit, decides whether g maps into g - v.
CoreResult is_core(const Graph& g, const SearchBudget& budget = SearchBudget::defaults());

struct CriticalityResult {
  SearchStatus status = SearchStatus::Solved;
  bool critical = false;
  int chi = 0;
  std::vector<int> deleted_chi;  // chi(g - v) per vertex
  std::optional<int> witness;    // first vertex whose deletion keeps chi
  SearchStats stats;
};

// Vertex-criticality. The per-vertex deletions run as an OpenMP loop; the serial version is
// the reference implementation.
CriticalityResult is_chi_critical(const Graph& g, const SearchBudget& budget = SearchBudget::defaults());
CriticalityResult is_chi_critical_serial(const Graph& g, const SearchBudget& budget = SearchBudget::defaults());

// --- constructive hom-idempotence ------------------------------------------------------

// (u,v) -> u+v mod n on cartesian_product(g,g) -> g, for a circulant with CyclicElem labels.
Homomorphism normal_cayley_self_hom(const Graph& g);

// The same addition carried to KG(ks+1,k)_{s-stab} through prop_iso_map:
// (a,b) -> phi(phi^-1(a) + phi^-1(b)).
Homomorphism stable_kneser_square_hom(int k, int s);

// --- closed forms ----------------------------------------------------------------------

struct ChiFormula {
  int value = 0;
  bool conjectural = false;
  std::string rule;
};

// Kneser n-2k+2; circular ceil(n/k); cycle powers a+1+ceil(r/q) with n = q(a+1)+r;
// stable Kneser: s=2 -> n-2k+2, n=ks+1 -> s+1, (2s+2,2,s>=3) -> s+2, other n > ks ->
// n-(k-1)s flagged conjectural. Throws std::invalid_argument for anything else.
ChiFormula closed_form_chi(const FamilySpec& spec);

}  // namespace klab
