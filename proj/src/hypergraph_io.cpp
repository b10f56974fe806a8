#include "hyperspec/hypergraph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

int require_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<int>();
}

}  // namespace

Hypergraph parse_hypergraph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError("top level: expected an object");
  for (const char* key : {"k", "n", "edges"})
    if (!doc.contains(key)) throw InputError(std::string("top level: missing field \"") + key + "\"");

  int k = require_int(doc["k"], "k");
  int n = require_int(doc["n"], "n");
  const auto& jedges = doc["edges"];
  if (!jedges.is_array()) throw InputError("edges: expected an array");
  std::vector<std::vector<int>> edges;
  edges.reserve(jedges.size());
  for (std::size_t e = 0; e < jedges.size(); ++e) {
    const auto& je = jedges[e];
    std::string where = "edges[" + std::to_string(e) + "]";
    if (!je.is_array()) throw InputError(where + ": expected an array of vertices");
    std::vector<int> edge;
    for (std::size_t t = 0; t < je.size(); ++t)
      edge.push_back(require_int(je[t], where + "[" + std::to_string(t) + "]"));
    edges.push_back(std::move(edge));
  }
  return validate(k, n, edges);
}

Hypergraph load_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_hypergraph_json(buf.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string hypergraph_to_json(const Hypergraph& h) {
  nlohmann::ordered_json doc;
  doc["k"] = h.uniformity();
  doc["n"] = h.num_vertices();
  doc["edges"] = h.edges_one_based();
  return doc.dump();
}

void save_hypergraph(const Hypergraph& h, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << hypergraph_to_json(h) << '\n';
}

}  // namespace hyperspec
