#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "klab/graph.hpp"
#include "klab/homsolver.hpp"

namespace klab {

// A re-checkable solver result. `source`/`target` are graph references (family spec text or
// a DIMACS path); for colourings the target is "colours:<c>".
//
// kind          payload key   meaning
// homomorphism  map           edge-preserving source -> target
// endomorphism  map           non-surjective source -> source
// retraction    map           source -> source fixing `fixed` pointwise
// isomorphism   map           two-way edge-preserving bijection
// coloring      coloring      proper colouring with the stated colour count
// clique        clique        pairwise adjacent source vertices
struct Certificate {
  std::string kind;
  std::string source;
  std::string target;
  std::vector<int> data;
  std::vector<int> fixed;  // retractions only
  bool verified = false;
  SearchStats stats;
};

nlohmann::json to_json(const Certificate& c, bool with_timing = true);
Certificate certificate_from_json(const nlohmann::json& j);

// Family spec text or DIMACS file path; "square:<ref>" is the cartesian square of <ref>.
Graph load_graph(const std::string& ref);

// Re-verifies the payload against freshly loaded graphs, without searching.
bool recheck_certificate(const Certificate& c);
bool recheck_certificate(const Certificate& c, const Graph& source, const Graph* target);

}  // namespace klab
