#include "klab/dimacs.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace klab {

void write_dimacs(std::ostream& os, const Graph& g, const std::string& comment) {
  if (!comment.empty()) os << "c " << comment << '\n';
  os << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  if (g.has_labels())
    for (int v = 0; v < g.order(); ++v) os << "c label " << v + 1 << ' ' << g.label(v).to_string() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_dimacs(const Graph& g, const std::string& comment) {
  std::ostringstream os;
  write_dimacs(os, g, comment);
  return os.str();
}

Graph read_dimacs(std::istream& is) {
  std::string line;
  int order = -1;
  std::size_t declared_edges = 0;
  std::vector<Edge> edges;
  std::map<int, VertexLabel> labels;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw dimacs_error("dimacs line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") {
      std::string kw;
      if (ls >> kw && kw == "label") {
        int v;
        std::string text;
        if (!(ls >> v >> text)) fail("malformed label comment");
        try {
          labels[v - 1] = VertexLabel::parse(text);
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        }
      }
    } else if (tag == "p") {
      std::string fmt;
      if (order >= 0) fail("duplicate problem line");
      if (!(ls >> fmt >> order >> declared_edges) || (fmt != "edge" && fmt != "col") || order < 0)
        fail("expected 'p edge <order> <edges>'");
    } else if (tag == "e") {
      int u, v;
      if (order < 0) fail("edge before problem line");
      if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
      if (u < 1 || v < 1 || u > order || v > order) fail("endpoint out of range");
      if (u == v) fail("self-loop");
      edges.emplace_back(u - 1, v - 1);
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  if (order < 0) throw dimacs_error("dimacs: missing problem line");
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != order || labels.begin()->first != 0 || labels.rbegin()->first != order - 1)
      throw dimacs_error("dimacs: labels must cover every vertex exactly once");
    std::vector<VertexLabel> ls;
    for (auto& [v, l] : labels) ls.push_back(std::move(l));
    b.set_labels(std::move(ls));
  }
  Graph g = std::move(b).build();
  // duplicates are tolerated, so the declared count is checked against distinct edges
  if (g.edge_count() != declared_edges && edges.size() != declared_edges)
    throw dimacs_error("dimacs: problem line declares " + std::to_string(declared_edges) + " edges, found " +
                       std::to_string(g.edge_count()));
  return g;
}

Graph read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dimacs_error("cannot open '" + path + "'");
  return read_dimacs(in);
}

}  // namespace klab
