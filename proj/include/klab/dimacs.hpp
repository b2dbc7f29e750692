#pragma once

#include <iosfwd>
#include <string>

#include "klab/graph.hpp"

namespace klab {

class dimacs_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "p edge <order> <edges>", "e <u> <v>" with 1-based endpoints, "c ..." comments.
// Labels travel as "c label <v> <text>" lines (v 1-based).
void write_dimacs(std::ostream& os, const Graph& g, const std::string& comment = {});
std::string to_dimacs(const Graph& g, const std::string& comment = {});

Graph read_dimacs(std::istream& is);
Graph read_dimacs_file(const std::string& path);

}  // namespace klab
