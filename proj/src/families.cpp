#include "hyperspec/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

const std::map<std::string, std::vector<std::string>> required_params = {
    {"edge", {"k"}},         {"hypertree", {"k", "m"}}, {"complete", {"n", "k"}},
    {"squid", {"k", "t"}},   {"sunflower", {"k", "s", "p"}}, {"power", {"k"}},
    {"graph", {}},           {"cartesian", {}},          {"coalesce", {}},
};

int parse_int(const std::string& text, const std::string& context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InputError(context + ": expected an integer, got '" + text + "'");
  return value;
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else if (ch == '[' || ch == ']') {
      flush();
      tokens.emplace_back(1, ch);
    } else {
      current += ch;
    }
  }
  flush();
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {}

  FamilyDescriptor parse_all() {
    auto family = parse_descriptor();
    if (pos_ != tokens_.size()) throw InputError("family: unexpected token '" + tokens_[pos_] + "'");
    return family;
  }

 private:
  bool at_end() const { return pos_ >= tokens_.size(); }
  const std::string& peek() const { return tokens_[pos_]; }

  FamilyDescriptor parse_part() {
    if (at_end()) throw InputError("family: missing operand");
    if (peek() == "[") {
      ++pos_;
      auto part = parse_descriptor();
      if (at_end() || peek() != "]") throw InputError("family: missing ']'");
      ++pos_;
      return part;
    }
    // A bare operand is a single token such as edge3.
    Parser inner({tokens_[pos_++]});
    return inner.parse_all();
  }

  FamilyDescriptor parse_descriptor() {
    if (at_end()) throw InputError("family: empty descriptor");
    FamilyDescriptor family;
    std::string head = tokens_[pos_++];
    if (head.rfind("edge", 0) == 0 && head.size() > 4) {
      family.kind = "edge";
      family.params["k"] = parse_int(head.substr(4), "family " + head);
    } else {
      family.kind = head;
    }
    if (!required_params.count(family.kind)) throw InputError("family: unknown family '" + head + "'");
    if (family.kind == "cartesian" || family.kind == "coalesce") {
      family.parts.push_back(parse_part());
      family.parts.push_back(parse_part());
    }
    while (!at_end() && peek() != "]" && peek().find('=') != std::string::npos) {
      const std::string& token = tokens_[pos_++];
      auto eq = token.find('=');
      std::string key = token.substr(0, eq);
      std::string value = token.substr(eq + 1);
      if (key == "g") {
        family.graph = value;
      } else if (key == "shape") {
        family.shape = value;
      } else {
        family.params[key] = parse_int(value, "family parameter " + key);
      }
    }
    for (const auto& name : required_params.at(family.kind))
      if (!family.params.count(name))
        throw InputError("family " + family.kind + ": missing parameter " + name + "=");
    if ((family.kind == "power" || family.kind == "graph") && family.graph.empty())
      throw InputError("family " + family.kind + ": missing parameter g=");
    return family;
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

int FamilyDescriptor::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw InputError("family " + kind + ": missing parameter " + name + "=");
  return it->second;
}

int FamilyDescriptor::uniformity() const {
  if (kind == "graph") return 2;
  if (kind == "cartesian" || kind == "coalesce") return parts.at(0).uniformity();
  return param("k");
}

std::string FamilyDescriptor::to_string() const {
  std::ostringstream out;
  auto part_text = [](const FamilyDescriptor& p) {
    std::string s = p.to_string();
    return s.find(' ') == std::string::npos ? s : "[" + s + "]";
  };
  if (kind == "edge" && params.size() == 1) return "edge" + std::to_string(param("k"));
  out << kind;
  for (const auto& p : parts) out << ' ' << part_text(p);
  if (!graph.empty()) out << " g=" << graph;
  if (!shape.empty()) out << " shape=" << shape;
  for (const auto& [key, value] : params) out << ' ' << key << '=' << value;
  return out.str();
}

FamilyDescriptor parse_family(const std::vector<std::string>& tokens) {
  std::string joined;
  for (const auto& t : tokens) joined += t + ' ';
  return parse_family(joined);
}

FamilyDescriptor parse_family(const std::string& text) { return Parser(tokenize(text)).parse_all(); }

SimpleGraph graph_by_name(const std::string& name) {
  if (name == "edge") return path_graph(2);
  if (name == "triangle") return cycle_graph(3);
  if (name == "petersen") return petersen_graph();
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string base = name.substr(0, colon);
    int size = parse_int(name.substr(colon + 1), "graph " + name);
    if (base == "path") return path_graph(size);
    if (base == "cycle") return cycle_graph(size);
    if (base == "star") return star_graph(size);
    if (base == "complete") return complete_graph(size);
  }
  throw InputError("unknown graph '" + name + "'");
}

Hypergraph build_family(const FamilyDescriptor& f) {
  if (f.kind == "edge") return gen_complete(f.param("k"), f.param("k"));
  if (f.kind == "hypertree") {
    const int m = f.param("m");
    if (m < 1) throw InputError("hypertree needs m >= 1");
    if (f.shape.empty() || f.shape == "path") return gen_power(path_graph(m + 1), f.param("k"));
    if (f.shape == "star") return gen_power(star_graph(m), f.param("k"));
    throw InputError("hypertree shape must be path or star, got '" + f.shape + "'");
  }
  if (f.kind == "complete") return gen_complete(f.param("n"), f.param("k"));
  if (f.kind == "squid") return gen_squid(f.param("k"), f.param("t"));
  if (f.kind == "sunflower") return gen_sunflower(f.param("k"), f.param("s"), f.param("p"));
  if (f.kind == "power") return gen_power(graph_by_name(f.graph), f.param("k"));
  if (f.kind == "graph") return as_hypergraph(graph_by_name(f.graph));
  if (f.kind == "cartesian") return cartesian(build_family(f.parts.at(0)), build_family(f.parts.at(1)));
  if (f.kind == "coalesce") {
    auto h1 = build_family(f.parts.at(0));
    auto h2 = build_family(f.parts.at(1));
    int v1 = f.params.count("v1") ? f.param("v1") : h1.num_vertices();
    int v2 = f.params.count("v2") ? f.param("v2") : 1;
    return coalesce(h1, v1, h2, v2);
  }
  throw InputError("unknown family '" + f.kind + "'");
}

std::vector<FamilyDescriptor> default_corpus() {
  const char* const entries[] = {
      "edge3",
      "edge4",
      "hypertree k=3 m=2",
      "complete n=4 k=3",
      "complete n=5 k=3",
      "squid k=3 t=1",
      "squid k=3 t=2",
      "squid k=3 t=3",
      "sunflower k=3 s=1 p=2",
      "sunflower k=3 s=2 p=2",
      "sunflower k=3 s=2 p=3",
      "sunflower k=3 s=2 p=4",
      "sunflower k=3 s=1 p=3",
      "power g=path:3 k=3",
      "power g=triangle k=3",
      "power g=path:4 k=3",
      "hypertree k=3 m=4 shape=star",
      "hypertree k=4 m=2",
      "sunflower k=4 s=2 p=2",
      "graph g=edge",
      "graph g=path:4",
      "graph g=cycle:5",
      "graph g=star:3",
      "graph g=petersen",
      "coalesce edge3 edge3",
      "coalesce [hypertree k=3 m=2] edge3",
      "cartesian edge3 edge3",
      "cartesian edge4 edge4",
  };
  std::vector<FamilyDescriptor> corpus;
  for (const char* e : entries) corpus.push_back(parse_family(std::string(e)));
  return corpus;
}

}  // namespace hyperspec
