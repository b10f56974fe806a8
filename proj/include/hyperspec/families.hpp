#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// A named hypergraph family with integer parameters, or a composite of two
/// descriptors. Text form (whitespace separated, brackets group a part):
///
///   edge3 | edge k=4
///   hypertree k=3 m=2 [shape=path|star]
///   complete n=5 k=3
///   squid k=3 t=2
///   sunflower k=3 s=1 p=2
///   power g=triangle k=3
///   graph g=petersen
///   cartesian A B
///   coalesce A B [v1=.. v2=..]
///
/// Graph names: edge, triangle, petersen, path:N, cycle:N, star:N
/// (N leaves), complete:N.
struct FamilyDescriptor {
  std::string kind;
  std::map<std::string, int> params;
  std::string graph;
  std::string shape;
  std::vector<FamilyDescriptor> parts;

  /// Canonical text form; parse_family(to_string()) round-trips.
  std::string to_string() const;
  int param(const std::string& name) const;
  int uniformity() const;
};

FamilyDescriptor parse_family(const std::vector<std::string>& tokens);
FamilyDescriptor parse_family(const std::string& text);

SimpleGraph graph_by_name(const std::string& name);
Hypergraph build_family(const FamilyDescriptor& family);

/// Instances run by `verify --corpus`, in report order.
std::vector<FamilyDescriptor> default_corpus();

}  // namespace hyperspec
