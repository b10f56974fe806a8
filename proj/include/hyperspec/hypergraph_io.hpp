#pragma once

#include <filesystem>
#include <string>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// Parses {"k": int, "n": int, "edges": [[int, ...], ...]} with 1-based
/// vertices. Errors name the offending field or byte offset.
Hypergraph parse_hypergraph_json(const std::string& text);
Hypergraph load_hypergraph(const std::filesystem::path& path);

std::string hypergraph_to_json(const Hypergraph& h);
void save_hypergraph(const Hypergraph& h, const std::filesystem::path& path);

}  // namespace hyperspec
