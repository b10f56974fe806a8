#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hyperspec/families.hpp"
#include "hyperspec/macaulay.hpp"
#include "oracle_values.hpp"

using namespace hyperspec;
using ::testing::HasSubstr;

namespace {

Hypergraph edge3() { return validate(3, 3, {{1, 2, 3}}); }
Hypergraph loose_path() { return validate(3, 5, {{1, 2, 3}, {3, 4, 5}}); }

UniPoly from_strings(const std::vector<std::string_view>& coeffs) {
  std::vector<Rational> c;
  for (auto s : coeffs) c.emplace_back(std::string(s));
  return UniPoly(std::move(c));
}

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(HYPERSPEC_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in) << name;
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

RationalMatrix graph_adjacency(const SimpleGraph& g) {
  RationalMatrix a(g.n, g.n, Rational(0));
  for (auto [u, v] : g.edges) a(u, v) = a(v, u) = 1;
  return a;
}

std::vector<Hypergraph> small_corpus(std::size_t max_basis) {
  std::vector<Hypergraph> out;
  for (const auto& f : default_corpus()) {
    auto h = build_family(f);
    if (basis_size(h.num_vertices(), h.uniformity()) <= max_basis) out.push_back(h);
  }
  return out;
}

}  // namespace

TEST(Basis, Sizes) {
  auto b = build_basis(3, 3);
  EXPECT_EQ(b.degree, 4);
  EXPECT_EQ(b.size(), 15u);
  auto b22 = build_basis(2, 2);
  EXPECT_EQ(b22.degree, 1);
  EXPECT_EQ(b22.size(), 2u);
  EXPECT_TRUE(b22.reduced[0] && b22.reduced[1]);
  auto b53 = build_basis(5, 3);
  EXPECT_EQ(b53.degree, 6);
  EXPECT_EQ(b53.size(), 210u);
  EXPECT_EQ(basis_size(9, 3), 43758);
}

TEST(Basis, OrderPartitionAndIndex) {
  for (auto [n, k] : {std::pair{3, 3}, {4, 3}, {3, 4}, {5, 2}, {2, 5}}) {
    auto b = build_basis(n, k);
    std::size_t reduced = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      auto alpha = b.monomial(i);
      int total = 0;
      for (int a : alpha) total += a;
      EXPECT_EQ(total, b.degree);
      EXPECT_EQ(b.index_of(alpha), i);
      if (i > 0) {
        auto prev = b.monomial(i - 1);
        EXPECT_TRUE(std::lexicographical_compare(alpha.begin(), alpha.end(), prev.begin(), prev.end()));
      }
      int first = -1, divisible = 0;
      for (int v = 0; v < n; ++v)
        if (alpha[v] >= k - 1) {
          if (first < 0) first = v;
          ++divisible;
        }
      EXPECT_EQ(b.part[i], first);
      EXPECT_EQ(b.reduced[i], divisible == 1);
      reduced += b.reduced[i];
    }
    // The reduced monomials carry exactly the degree of the characteristic polynomial.
    EXPECT_EQ(Integer(static_cast<unsigned long>(reduced)), expected_charpoly_degree(n, k));
  }
  EXPECT_EQ(build_basis(3, 3).monomial_name(4), "x1^2*x2*x3");
}

TEST(Basis, GuardRefusalNamesTheBinomial) {
  try {
    build_basis(9, 3);
    FAIL() << "expected GuardExceeded";
  } catch (const GuardExceeded& e) {
    EXPECT_THAT(e.what(), HasSubstr("C(18, 8) = 43758"));
    EXPECT_EQ(e.requested(), 43758u);
    EXPECT_EQ(e.cap(), default_monomial_cap);
  }
  EXPECT_EQ(build_basis(9, 3, 50000).size(), 43758u);
  EXPECT_THROW(build_basis(0, 3), InputError);
  EXPECT_THROW(build_basis(3, 1), InputError);
}

TEST(Matrices, IdentityTensorGivesIdentity) {
  for (auto [n, k] : {std::pair{3, 3}, {4, 3}, {3, 4}}) {
    auto pair = macaulay_matrices(CubicalTensor<Rational>::identity(k, n));
    EXPECT_EQ(pair.m, RationalMatrix::identity(pair.basis->size()));
  }
}

TEST(Matrices, LaplacianRowsSumToZero) {
  for (const auto& h : {edge3(), loose_path(), gen_complete(4, 3)}) {
    auto m = macaulay_matrices(laplacian_tensor(h)).m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Rational sum = 0;
      for (const auto& v : m.row(i)) sum += v;
      EXPECT_EQ(sum, 0);
    }
  }
}

TEST(Matrices, DiagonalIsPureCoefficient) {
  for (const auto& h : small_corpus(300)) {
    auto l = laplacian_tensor(h);
    auto pair = macaulay_matrices(l);
    auto deg = degrees(h);
    for (std::size_t r = 0; r < pair.basis->size(); ++r) {
      const int i = pair.basis->part[r];
      EXPECT_EQ(pair.m(r, r), Rational(deg[i]));
      EXPECT_EQ(pair.m(r, r), l.at(std::vector<int>(h.uniformity(), i)));
    }
  }
}

TEST(Matrices, GraphCaseIsTheMatrix) {
  for (const auto& name : {"edge", "path:4", "cycle:5", "star:3", "petersen"}) {
    auto g = graph_by_name(name);
    auto h = as_hypergraph(g);
    auto pair = macaulay_matrices(adjacency_tensor(h));
    EXPECT_EQ(pair.m, graph_adjacency(g)) << name;
    EXPECT_TRUE(pair.m_prime.empty());
    EXPECT_EQ(tensor_charpoly(adjacency_tensor(h)), charpoly_matrix(graph_adjacency(g))) << name;
  }
  auto edge = as_hypergraph(graph_by_name("edge"));
  EXPECT_EQ(tensor_charpoly(adjacency_tensor(edge)), UniPoly({Rational(-1), Rational(0), Rational(1)}));
}

TEST(Charpoly, FrozenOracleValues) {
  for (const auto& c : oracle::cases()) {
    auto h = validate(c.k, c.n, c.edges);
    EXPECT_EQ(tensor_charpoly(adjacency_tensor(h)), from_strings(c.adjacency)) << c.name;
    EXPECT_EQ(tensor_charpoly(laplacian_tensor(h)), from_strings(c.laplacian)) << c.name;
    EXPECT_EQ(tensor_charpoly(signless_laplacian_tensor(h)), from_strings(c.signless)) << c.name;
    EXPECT_EQ(macaulay_nullity_laplacian(h), c.laplacian_nullity) << c.name;
  }
}

TEST(Charpoly, SingleEdgeExamples) {
  auto lap = tensor_charpoly(laplacian_tensor(edge3()));
  EXPECT_EQ(lap.degree(), 12);
  EXPECT_EQ(lap.trailing_zeros(), 3);
  auto adj = tensor_charpoly(adjacency_tensor(edge3()));
  EXPECT_EQ(adj.degree(), 12);
  // (x^3 - 1)^3 up to a factor x^3: largest real root 1 with multiplicity 3.
  auto cube = UniPoly({Rational(-1), 0, 0, Rational(1)});
  EXPECT_EQ(adj, UniPoly::monomial(1, 3) * pow(cube, 3));
}

TEST(Charpoly, KernelsAgree) {
  for (const auto& h : {edge3(), gen_complete(4, 3), validate(3, 4, {{1, 2, 3}, {1, 2, 4}})}) {
    for (auto op : {Operator::adjacency, Operator::laplacian, Operator::signless_laplacian}) {
      auto t = hypergraph_tensor(h, op);
      auto fast = tensor_charpoly_detailed(t, default_monomial_cap, CharpolyKernel::multimodular);
      auto slow = tensor_charpoly_detailed(t, default_monomial_cap, CharpolyKernel::interpolation);
      EXPECT_EQ(fast.phi, slow.phi);
      EXPECT_EQ(fast.full, slow.full);
      EXPECT_EQ(fast.minor, slow.minor);
    }
  }
}

TEST(Charpoly, QuotientAndDegreeOnCorpus) {
  for (const auto& h : small_corpus(300)) {
    for (auto op : {Operator::adjacency, Operator::laplacian}) {
      auto c = tensor_charpoly_detailed(hypergraph_tensor(h, op));
      EXPECT_EQ(c.full, c.phi * c.minor);
      EXPECT_EQ(Integer(c.phi.degree()), expected_charpoly_degree(h.num_vertices(), h.uniformity()));
      EXPECT_EQ(c.phi.leading(), 1);
    }
  }
}

TEST(Charpoly, InvariantUnderDiagonalSimilarity) {
  auto a = adjacency_tensor(gen_complete(4, 3));
  DiagonalScaling<Rational> d{{Rational(1), Rational(2), Rational(3), Rational(5)}};
  EXPECT_EQ(tensor_charpoly(diagonal_similarity(a, d)), tensor_charpoly(a));
}

TEST(Charpoly, ExpectedDegree) {
  EXPECT_EQ(expected_charpoly_degree(3, 3), 12);
  EXPECT_EQ(expected_charpoly_degree(5, 3), 80);
  EXPECT_EQ(expected_charpoly_degree(4, 4), 108);
  EXPECT_EQ(expected_charpoly_degree(7, 2), 7);
}

TEST(RowStochastic, Examples) {
  auto a = laplacian_row_stochastic_check(edge3());
  EXPECT_EQ(a.rows(), 15u);
  EXPECT_EQ(laplacian_row_stochastic_check(loose_path()).rows(), 210u);
  auto k4 = laplacian_row_stochastic_check(gen_complete(4, 3));
  for (std::size_t i = 0; i < k4.rows(); ++i) {
    Rational sum = 0;
    for (const auto& v : k4.row(i)) {
      EXPECT_GE(sgn(v), 0);
      sum += v;
    }
    EXPECT_EQ(sum, 1);
  }
  EXPECT_THROW(laplacian_row_stochastic_check(validate(3, 6, {{1, 2, 3}, {4, 5, 6}})), DisconnectedError);
}

TEST(Nullity, Examples) {
  EXPECT_EQ(macaulay_nullity_laplacian(edge3()), 3u);
  EXPECT_EQ(macaulay_nullity_laplacian(loose_path()), 9u);
  EXPECT_EQ(macaulay_nullity_laplacian(gen_complete(4, 3)), 1u);
}

TEST(Golden, TensorDump) {
  std::ostringstream out;
  dump_tensor(adjacency_tensor(edge3()), out);
  EXPECT_EQ(out.str(), read_file("edge3_adjacency_tensor.txt"));
}

TEST(Golden, LaplacianMacaulayCsv) {
  auto pair = macaulay_matrices(laplacian_tensor(edge3()));
  std::vector<std::size_t> all(pair.basis->size());
  std::iota(all.begin(), all.end(), 0);
  std::ostringstream m, mp;
  dump_macaulay_csv(pair.m, *pair.basis, all, m);
  dump_macaulay_csv(pair.m_prime, *pair.basis, pair.nonreduced, mp);
  EXPECT_EQ(m.str(), read_file("edge3_laplacian_macaulay.csv"));
  EXPECT_EQ(mp.str(), read_file("edge3_laplacian_macaulay_prime.csv"));
}

TEST(Deviation, RowStochasticDeviation) {
  Matrix<double> m(2, 2);
  m(0, 0) = 0.25;
  m(0, 1) = 0.75;
  m(1, 0) = 1.5;
  EXPECT_DOUBLE_EQ(row_stochastic_deviation(m), 0.5);
}
