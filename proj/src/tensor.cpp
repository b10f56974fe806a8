#include "hyperspec/tensor.hpp"

namespace hyperspec {

namespace {

Rational inverse_factorial(int m) {
  mpz_class f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return Rational(1, f);
}

// Writes sign / (k-1)! on every permutation of every edge.
void add_edges(CubicalTensor<Rational>& t, const Hypergraph& h, int sign) {
  const Rational w = inverse_factorial(h.uniformity() - 1) * sign;
  for (const auto& e : h.edges()) {
    for (int v : e) {
      std::vector<int> index{v};
      for (int u : e)
        if (u != v) index.push_back(u);
      t.set(index, w);
    }
  }
}

}  // namespace

CubicalTensor<Rational> adjacency_tensor(const Hypergraph& h) {
  CubicalTensor<Rational> t(h.uniformity(), h.num_vertices());
  add_edges(t, h, 1);
  return t;
}

CubicalTensor<Rational> degree_tensor(const Hypergraph& h) {
  CubicalTensor<Rational> t(h.uniformity(), h.num_vertices());
  auto deg = degrees(h);
  for (int v = 0; v < h.num_vertices(); ++v) t.set(std::vector<int>(h.uniformity(), v), Rational(deg[v]));
  return t;
}

CubicalTensor<Rational> laplacian_tensor(const Hypergraph& h) {
  auto t = degree_tensor(h);
  add_edges(t, h, -1);
  return t;
}

CubicalTensor<Rational> signless_laplacian_tensor(const Hypergraph& h) {
  auto t = degree_tensor(h);
  add_edges(t, h, 1);
  return t;
}

std::string to_string(Operator op) {
  switch (op) {
    case Operator::adjacency: return "adj";
    case Operator::laplacian: return "lap";
    case Operator::signless_laplacian: return "slap";
  }
  return "?";
}

Operator parse_operator(const std::string& name) {
  if (name == "adj" || name == "adjacency") return Operator::adjacency;
  if (name == "lap" || name == "laplacian") return Operator::laplacian;
  if (name == "slap" || name == "signless") return Operator::signless_laplacian;
  throw InputError("unknown operator '" + name + "' (expected adj, lap or slap)");
}

CubicalTensor<Rational> hypergraph_tensor(const Hypergraph& h, Operator op) {
  switch (op) {
    case Operator::adjacency: return adjacency_tensor(h);
    case Operator::laplacian: return laplacian_tensor(h);
    case Operator::signless_laplacian: return signless_laplacian_tensor(h);
  }
  throw InputError("unknown operator");
}

void dump_tensor(const CubicalTensor<Rational>& t, std::ostream& out) {
  t.for_each_entry([&](std::span<const int> index, const Rational& value) {
    for (int i : index) out << i + 1 << ' ';
    out << value.get_num().get_str() << ' ' << value.get_den().get_str() << '\n';
  });
}

}  // namespace hyperspec
