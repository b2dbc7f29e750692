#include "klab/certificate.hpp"

#include <algorithm>
#include <stdexcept>

#include "klab/dimacs.hpp"
#include "klab/family_spec.hpp"

namespace klab {

using nlohmann::json;

namespace {

const char* payload_key(const std::string& kind) {
  if (kind == "coloring") return "coloring";
  if (kind == "clique") return "clique";
  if (kind == "homomorphism" || kind == "endomorphism" || kind == "retraction" || kind == "isomorphism") return "map";
  throw std::invalid_argument("unknown certificate kind '" + kind + "'");
}

}  // namespace

json to_json(const Certificate& c, bool with_timing) {
  json j;
  j["kind"] = c.kind;
  j["source"] = c.source;
  j["target"] = c.target;
  j[payload_key(c.kind)] = c.data;
  if (c.kind == "retraction") j["fixed"] = c.fixed;
  j["verified"] = c.verified;
  j["nodes"] = c.stats.nodes;
  if (with_timing) j["seconds"] = c.stats.seconds;
  return j;
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.kind = j.at("kind").get<std::string>();
  c.source = j.at("source").get<std::string>();
  c.target = j.value("target", std::string{});
  c.data = j.at(payload_key(c.kind)).get<std::vector<int>>();
  if (j.contains("fixed")) c.fixed = j.at("fixed").get<std::vector<int>>();
  c.verified = j.value("verified", false);
  c.stats.nodes = j.value("nodes", std::uint64_t{0});
  c.stats.seconds = j.value("seconds", 0.0);
  return c;
}

Graph load_graph(const std::string& ref) {
  if (ref.rfind("square:", 0) == 0) {
    Graph g = load_graph(ref.substr(7));
    return cartesian_product(g, g);
  }
  if (looks_like_family_spec(ref)) return build(parse_family_spec(ref));
  return read_dimacs_file(ref);
}

bool recheck_certificate(const Certificate& c, const Graph& source, const Graph* target) {
  const auto& d = c.data;
  if (c.kind == "homomorphism") return target && verify_homomorphism(source, *target, d);
  if (c.kind == "isomorphism") return target && check_isomorphism(source, *target, d);
  if (c.kind == "endomorphism") {
    if (!verify_homomorphism(source, source, d)) return false;
    std::vector<char> hit(source.order(), 0);
    for (int x : d) hit[x] = 1;
    return std::find(hit.begin(), hit.end(), 0) != hit.end();
  }
  if (c.kind == "retraction") {
    if (!verify_homomorphism(source, source, d)) return false;
    for (int u : c.fixed)
      if (u < 0 || u >= source.order() || d[u] != u) return false;
    for (int x : d)
      if (std::find(c.fixed.begin(), c.fixed.end(), x) == c.fixed.end()) return false;
    return true;
  }
  if (c.kind == "coloring") {
    const std::string prefix = "colours:";
    if (c.target.rfind(prefix, 0) != 0) return false;
    return verify_colouring(source, d, std::stoi(c.target.substr(prefix.size())));
  }
  if (c.kind == "clique") {
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 0 || d[i] >= source.order()) return false;
      for (std::size_t j = i + 1; j < d.size(); ++j)
        if (!source.adjacent(d[i], d[j])) return false;
    }
    return true;
  }
  return false;
}

bool recheck_certificate(const Certificate& c) {
  Graph source = load_graph(c.source);
  if (c.kind == "homomorphism" || c.kind == "isomorphism") {
    Graph target = load_graph(c.target);
    return recheck_certificate(c, source, &target);
  }
  return recheck_certificate(c, source, nullptr);
}

}  // namespace klab
