#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

std::string edge_label(std::size_t index) {
  return "edges[" + std::to_string(index) + "]";
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

Hypergraph validate(int k, int n, const std::vector<std::vector<int>>& raw_edges) {
  if (k < 2) throw InputError("uniformity k must be at least 2, got " + std::to_string(k));
  if (n < 1) throw InputError("vertex count n must be at least 1, got " + std::to_string(n));

  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  for (std::size_t e = 0; e < raw_edges.size(); ++e) {
    const auto& raw = raw_edges[e];
    if (static_cast<int>(raw.size()) != k) {
      throw InputError(edge_label(e) + ": expected " + std::to_string(k) + " vertices, got " +
                       std::to_string(raw.size()));
    }
    Edge edge;
    edge.reserve(k);
    for (std::size_t t = 0; t < raw.size(); ++t) {
      int v = raw[t];
      if (v < 1 || v > n) {
        throw InputError(edge_label(e) + "[" + std::to_string(t) + "]: vertex " + std::to_string(v) +
                         " outside 1.." + std::to_string(n));
      }
      edge.push_back(v - 1);
    }
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw InputError(edge_label(e) + ": repeated vertex inside an edge");
    }
    edges.push_back(std::move(edge));
  }
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      throw InputError(edge_label(std::max(order[i], order[i - 1])) + ": duplicate of " +
                       edge_label(std::min(order[i], order[i - 1])));
    }
  }
  std::sort(edges.begin(), edges.end());
  return Hypergraph(k, n, std::move(edges));
}

std::vector<std::vector<int>> Hypergraph::edges_one_based() const {
  std::vector<std::vector<int>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) {
    std::vector<int> shifted(e);
    for (int& v : shifted) ++v;
    out.push_back(std::move(shifted));
  }
  return out;
}

bool is_connected(const Hypergraph& h) {
  DisjointSets sets(h.num_vertices());
  for (const auto& e : h.edges())
    for (std::size_t t = 1; t < e.size(); ++t) sets.unite(e[0], e[t]);
  int root = sets.find(0);
  for (int v = 1; v < h.num_vertices(); ++v)
    if (sets.find(v) != root) return false;
  return true;
}

std::vector<int> degrees(const Hypergraph& h) {
  std::vector<int> deg(h.num_vertices(), 0);
  for (const auto& e : h.edges())
    for (int v : e) ++deg[v];
  return deg;
}

int max_degree(const Hypergraph& h) {
  auto deg = degrees(h);
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

IncidenceMatrix incidence_matrix(const Hypergraph& h) {
  IncidenceMatrix b(h.num_edges(), h.num_vertices(), 0);
  for (int e = 0; e < h.num_edges(); ++e)
    for (int v : h.edges()[e]) b(e, v) = 1;
  return b;
}

SimpleGraph make_graph(int n, const std::vector<std::pair<int, int>>& raw_edges) {
  if (n < 1) throw InputError("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : raw_edges) {
    if (a < 1 || a > n || b < 1 || b > n) throw InputError("graph edge vertex outside 1.." + std::to_string(n));
    if (a == b) throw InputError("graph edge is a loop at " + std::to_string(a));
    std::pair<int, int> key{std::min(a, b) - 1, std::max(a, b) - 1};
    if (!seen.insert(key).second) {
      throw InputError("duplicate graph edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
  }
  return SimpleGraph{n, {seen.begin(), seen.end()}};
}

SimpleGraph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
  return make_graph(n, e);
}

SimpleGraph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 2; i <= leaves + 1; ++i) e.emplace_back(1, i);
  return make_graph(leaves + 1, e);
}

SimpleGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

SimpleGraph petersen_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i + 1, (i + 1) % 5 + 1);          // outer cycle
    e.emplace_back(i + 6, (i + 2) % 5 + 6);          // inner pentagram
    e.emplace_back(i + 1, i + 6);                    // spokes
  }
  return make_graph(10, e);
}

Hypergraph as_hypergraph(const SimpleGraph& g) {
  std::vector<std::vector<int>> edges;
  for (auto [u, v] : g.edges) edges.push_back({u + 1, v + 1});
  return validate(2, g.n, edges);
}

Hypergraph gen_complete(int n, int k) {
  if (k < 2) throw InputError("complete hypergraph needs k >= 2");
  if (n < k) throw InputError("complete hypergraph needs n >= k");
  std::vector<std::vector<int>> edges;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> e;
    for (int v = 0; v < n; ++v)
      if (pick[v]) e.push_back(v + 1);
    edges.push_back(std::move(e));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return validate(k, n, edges);
}

Hypergraph gen_power(const SimpleGraph& g, int k) {
  if (k < 3) throw InputError("power hypergraph needs k >= 3, got " + std::to_string(k));
  int next = g.n + 1;
  std::vector<std::vector<int>> edges;
  for (auto [u, v] : g.edges) {
    std::vector<int> e{u + 1, v + 1};
    for (int t = 0; t < k - 2; ++t) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return validate(k, next - 1, edges);
}

Hypergraph gen_squid(int k, int t) {
  if (t < 1 || t > k) throw InputError("squid needs 1 <= t <= k, got t=" + std::to_string(t));
  std::vector<std::vector<int>> edges;
  std::vector<int> body(k);
  std::iota(body.begin(), body.end(), 1);
  edges.push_back(body);
  int next = k + 1;
  for (int leg = 1; leg <= t; ++leg) {
    std::vector<int> e{leg};
    for (int j = 0; j < k - 1; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return validate(k, next - 1, edges);
}

Hypergraph gen_sunflower(int k, int s, int p) {
  if (s < 1 || s > k - 1) throw InputError("sunflower needs 1 <= s <= k-1, got s=" + std::to_string(s));
  if (p < 1) throw InputError("sunflower needs at least one petal");
  std::vector<std::vector<int>> edges;
  int next = s + 1;
  for (int petal = 0; petal < p; ++petal) {
    std::vector<int> e(s);
    std::iota(e.begin(), e.end(), 1);
    for (int j = 0; j < k - s; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return validate(k, next - 1, edges);
}

Hypergraph gen_trivial(int k) { return validate(k, 1, {}); }

Hypergraph coalesce(const Hypergraph& h1, int v1, const Hypergraph& h2, int v2) {
  if (h1.uniformity() != h2.uniformity()) throw InputError("coalescence needs equal uniformity");
  if (v1 < 1 || v1 > h1.num_vertices()) throw InputError("coalescence vertex v1 out of range");
  if (v2 < 1 || v2 > h2.num_vertices()) throw InputError("coalescence vertex v2 out of range");
  int n1 = h1.num_vertices();
  // h2 vertex w (1-based) -> new label
  auto relabel = [&](int w) {
    if (w == v2) return v1;
    return n1 + (w < v2 ? w : w - 1);
  };
  auto edges = h1.edges_one_based();
  for (auto e : h2.edges_one_based()) {
    for (int& w : e) w = relabel(w);
    edges.push_back(std::move(e));
  }
  return validate(h1.uniformity(), n1 + h2.num_vertices() - 1, edges);
}

Hypergraph cartesian(const Hypergraph& h1, const Hypergraph& h2) {
  if (h1.uniformity() != h2.uniformity()) throw InputError("cartesian product needs equal uniformity");
  int n1 = h1.num_vertices();
  int n2 = h2.num_vertices();
  auto label = [n2](int i, int j) { return i * n2 + j + 1; };
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < n1; ++i)
    for (const auto& f : h2.edges()) {
      std::vector<int> e;
      for (int j : f) e.push_back(label(i, j));
      edges.push_back(std::move(e));
    }
  for (int j = 0; j < n2; ++j)
    for (const auto& f : h1.edges()) {
      std::vector<int> e;
      for (int i : f) e.push_back(label(i, j));
      edges.push_back(std::move(e));
    }
  return validate(h1.uniformity(), n1 * n2, edges);
}

}  // namespace hyperspec
