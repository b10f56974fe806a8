#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperspec/matrix.hpp"

namespace hyperspec {

/// Sorted 0-based vertex list of one edge.
using Edge = std::vector<int>;

/// A k-uniform hypergraph on vertices 0..n-1 (1..n at every I/O boundary).
///
/// Edges are stored canonically: each edge sorted ascending, the edge list
/// sorted lexicographically, no duplicates. Instances are immutable once
/// built, so the only way to obtain one is through validate() or the
/// generators below, all of which go through the same checks.
class Hypergraph {
 public:
  int uniformity() const { return k_; }
  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Edges as 1-based vertex lists (the external labelling).
  std::vector<std::vector<int>> edges_one_based() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  friend Hypergraph validate(int k, int n, const std::vector<std::vector<int>>& raw_edges);
  Hypergraph(int k, int n, std::vector<Edge> edges) : k_(k), n_(n), edges_(std::move(edges)) {}

  int k_ = 0;
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Builds a hypergraph from 1-based edges. Throws InputError on a
/// non-uniform edge, an out-of-range or repeated vertex, or a duplicate edge.
Hypergraph validate(int k, int n, const std::vector<std::vector<int>>& raw_edges);

bool is_connected(const Hypergraph& h);

/// d_v for v = 0..n-1.
std::vector<int> degrees(const Hypergraph& h);
int max_degree(const Hypergraph& h);

/// m x n matrix with b(e, v) = 1 iff v in e, rows in canonical edge order.
using IncidenceMatrix = Matrix<int>;
IncidenceMatrix incidence_matrix(const Hypergraph& h);

/// Loopless simple graph on 0..n-1.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique
};

/// 1-based edge pairs in, canonical SimpleGraph out. Throws InputError.
SimpleGraph make_graph(int n, const std::vector<std::pair<int, int>>& raw_edges);

SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph star_graph(int leaves);
SimpleGraph complete_graph(int n);
SimpleGraph petersen_graph();

/// A graph viewed as a 2-uniform hypergraph.
Hypergraph as_hypergraph(const SimpleGraph& g);

// Family generators. All outputs are connected.

/// K_n^[k]: every k-subset of n vertices is an edge.
Hypergraph gen_complete(int n, int k);

/// G^(k): each edge {u, v} of G becomes {u, v, w_1..w_{k-2}} with fresh
/// vertices appended after G's vertices, in canonical edge order.
Hypergraph gen_power(const SimpleGraph& g, int k);

/// Generalized squid S(k, t): body edge 1..k, and a leg edge with k-1
/// fresh vertices hanging off each of the body vertices 1..t.
Hypergraph gen_squid(int k, int t);

/// Sunflower S(k, s, p): seeds 1..s shared by p edges, each edge adding
/// k-s fresh petal vertices.
Hypergraph gen_sunflower(int k, int s, int p);

/// The one-vertex hypergraph with no edges.
Hypergraph gen_trivial(int k);

/// Coalescence: disjoint union with v1 (of h1) and v2 (of h2) identified.
/// Vertices are 1-based. h1 keeps its labels; the merged vertex keeps v1's
/// label and h2's other vertices follow in their original order.
Hypergraph coalesce(const Hypergraph& h1, int v1, const Hypergraph& h2, int v2);

/// Cartesian product; vertex (i, j) maps to i * n2 + j (0-based, row-major).
Hypergraph cartesian(const Hypergraph& h1, const Hypergraph& h2);

}  // namespace hyperspec
