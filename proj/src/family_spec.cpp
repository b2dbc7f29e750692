#include "klab/family_spec.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "klab/families.hpp"

namespace klab {

namespace {

using Fields = std::map<std::string, std::vector<std::string>, std::less<>>;

// "n=8,conn=1,2,6,7": a token without '=' extends the previous key's list.
Fields split_fields(std::string_view body, std::string_view text) {
  Fields out;
  std::string current;
  while (!body.empty()) {
    auto comma = body.find(',');
    auto tok = body.substr(0, comma);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    auto eq = tok.find('=');
    if (eq != std::string_view::npos) {
      current = std::string(tok.substr(0, eq));
      if (out.count(current)) throw std::invalid_argument("duplicate field '" + current + "' in '" + std::string(text) + "'");
      out[current].emplace_back(tok.substr(eq + 1));
    } else {
      if (current.empty()) throw std::invalid_argument("malformed family spec '" + std::string(text) + "'");
      out[current].emplace_back(tok);
    }
  }
  return out;
}

int to_int(const std::string& s, std::string_view text) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw std::invalid_argument("bad integer '" + s + "' in '" + std::string(text) + "'");
  return v;
}

int scalar(const Fields& f, const char* key, std::string_view text) {
  auto it = f.find(key);
  if (it == f.end()) throw std::invalid_argument(std::string("missing field '") + key + "' in '" + std::string(text) + "'");
  if (it->second.size() != 1) throw std::invalid_argument(std::string("field '") + key + "' must be a single value");
  return to_int(it->second[0], text);
}

void expect_keys(const Fields& f, std::initializer_list<const char*> keys, std::string_view text) {
  if (f.size() != keys.size())
    throw std::invalid_argument("unexpected fields in '" + std::string(text) + "'");
  for (const char* k : keys)
    if (!f.count(k)) throw std::invalid_argument(std::string("missing field '") + k + "' in '" + std::string(text) + "'");
}

}  // namespace

bool looks_like_family_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return false;
  auto kind = text.substr(0, colon);
  return kind == "kneser" || kind == "stable" || kind == "circular" || kind == "cyclepow" || kind == "circulant" ||
         kind == "caydih";
}

FamilySpec parse_family_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("family spec needs '<kind>:' prefix: '" + std::string(text) + "'");
  auto kind = text.substr(0, colon);
  auto f = split_fields(text.substr(colon + 1), text);
  if (kind == "kneser") {
    expect_keys(f, {"n", "k"}, text);
    return KneserSpec{scalar(f, "n", text), scalar(f, "k", text)};
  }
  if (kind == "stable") {
    expect_keys(f, {"n", "k", "s"}, text);
    return StableKneserSpec{scalar(f, "n", text), scalar(f, "k", text), scalar(f, "s", text)};
  }
  if (kind == "circular") {
    expect_keys(f, {"n", "k"}, text);
    return CircularSpec{scalar(f, "n", text), scalar(f, "k", text)};
  }
  if (kind == "cyclepow") {
    expect_keys(f, {"n", "a"}, text);
    return CyclePowerSpec{scalar(f, "n", text), scalar(f, "a", text)};
  }
  if (kind == "circulant") {
    expect_keys(f, {"n", "conn"}, text);
    CirculantSpec c{scalar(f, "n", text), {}};
    for (const auto& x : f.at("conn"))
      if (!x.empty()) c.connection.push_back(to_int(x, text));
    return c;
  }
  if (kind == "caydih") {
    expect_keys(f, {"n", "gens"}, text);
    CayleyDihedralSpec c{scalar(f, "n", text), {}};
    for (const auto& x : f.at("gens"))
      if (!x.empty()) c.gens.push_back(DihedralElement::parse(x, c.n));
    return c;
  }
  throw std::invalid_argument("unknown graph family '" + std::string(kind) + "'");
}

std::string to_string(const FamilySpec& spec) {
  std::ostringstream os;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, KneserSpec>) os << "kneser:n=" << s.n << ",k=" << s.k;
        else if constexpr (std::is_same_v<T, StableKneserSpec>) os << "stable:n=" << s.n << ",k=" << s.k << ",s=" << s.s;
        else if constexpr (std::is_same_v<T, CircularSpec>) os << "circular:n=" << s.n << ",k=" << s.k;
        else if constexpr (std::is_same_v<T, CyclePowerSpec>) os << "cyclepow:n=" << s.n << ",a=" << s.a;
        else if constexpr (std::is_same_v<T, CirculantSpec>) {
          os << "circulant:n=" << s.n << ",conn=";
          for (std::size_t i = 0; i < s.connection.size(); ++i) os << (i ? "," : "") << s.connection[i];
        } else {
          os << "caydih:n=" << s.n << ",gens=";
          for (std::size_t i = 0; i < s.gens.size(); ++i) os << (i ? "," : "") << s.gens[i].to_string();
        }
      },
      spec);
  return os.str();
}

Graph build(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, KneserSpec>) return kneser(s.n, s.k);
        else if constexpr (std::is_same_v<T, StableKneserSpec>) return stable_kneser(s.n, s.k, s.s);
        else if constexpr (std::is_same_v<T, CircularSpec>) return circular_graph(s.n, s.k);
        else if constexpr (std::is_same_v<T, CyclePowerSpec>) return cycle_power(s.n, s.a);
        else if constexpr (std::is_same_v<T, CirculantSpec>) return circulant(s.n, s.connection);
        else return cayley_dihedral(s.n, s.gens);
      },
      spec);
}

}  // namespace klab
