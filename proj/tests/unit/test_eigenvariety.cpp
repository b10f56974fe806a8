#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hyperspec/eigenvariety.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/spectral.hpp"

using namespace hyperspec;

namespace {

Hypergraph edge3() { return validate(3, 3, {{1, 2, 3}}); }
Hypergraph loose_path() { return validate(3, 5, {{1, 2, 3}, {3, 4, 5}}); }

std::uint64_t power(int k, int n) {
  std::uint64_t p = 1;
  for (int i = 0; i < n; ++i) p *= k;
  return p;
}

std::set<PhaseVector> as_set(const std::vector<PhaseVector>& v) { return {v.begin(), v.end()}; }

std::vector<Hypergraph> corpus() {
  std::vector<Hypergraph> out;
  for (const auto& f : default_corpus()) out.push_back(build_family(f));
  return out;
}

// Connected k-uniform hypergraph from a random spanning chain plus extra edges.
Hypergraph random_connected(std::mt19937& rng, int k, int n, int extra) {
  std::vector<std::vector<int>> edges;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> vertex(1, n);
  std::set<std::vector<int>> seen;
  auto add = [&](std::vector<int> e) {
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) == e.end() && seen.insert(e).second) edges.push_back(e);
  };
  // Each new edge shares one vertex with what is already covered.
  int covered = 1;
  while (covered < n) {
    std::vector<int> e{order[std::uniform_int_distribution<int>(0, covered - 1)(rng)]};
    while (static_cast<int>(e.size()) < k) {
      if (covered < n) {
        e.push_back(order[covered++]);
      } else {
        int v;
        do v = vertex(rng);
        while (std::find(e.begin(), e.end(), v) != e.end());
        e.push_back(v);
      }
    }
    add(e);
  }
  for (int i = 0; i < extra; ++i) {
    std::vector<int> e;
    while (static_cast<int>(e.size()) < k) {
      int v = vertex(rng);
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    add(e);
  }
  return validate(k, n, edges);
}

}  // namespace

TEST(SnfModK, Examples) {
  auto a = snf_mod_k(incidence_matrix(edge3()), 3);
  EXPECT_EQ(a.divisors, std::vector<Integer>{1});
  EXPECT_EQ(a.rank, 1);
  auto b = snf_mod_k(incidence_matrix(loose_path()), 3);
  EXPECT_EQ(b.divisors, (std::vector<Integer>{1, 1}));
  EXPECT_EQ(b.rank, 2);
  auto c = snf_mod_k(incidence_matrix(gen_complete(4, 3)), 3);
  EXPECT_EQ(c.rank, 3);
  EXPECT_EQ(describe(gen_complete(4, 3)).cardinality, 1);
  // Integer invariants (1, 1, 1, 3): the 3 vanishes mod 3.
  auto d = describe(gen_complete(4, 3));
  EXPECT_EQ(d.divisors, (std::vector<Integer>{1, 1, 1}));
  EXPECT_TRUE(d.group.empty());
}

TEST(Cardinality, Examples) {
  EXPECT_EQ(cardinality(edge3()), 3);
  EXPECT_EQ(cardinality(gen_squid(3, 3)), 81);
  EXPECT_EQ(cardinality(gen_power(cycle_graph(3), 3)), 9);
  EXPECT_EQ(cardinality(loose_path()), 9);
  EXPECT_THROW(cardinality(validate(3, 6, {{1, 2, 3}, {4, 5, 6}})), DisconnectedError);
  auto d = describe(edge3());
  EXPECT_EQ(d.group, std::vector<Integer>{3});
}

TEST(Enumerate, SingleEdge) {
  auto phases = enumerate_phases(edge3());
  EXPECT_EQ(phases, (std::vector<PhaseVector>{{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}));
  EXPECT_EQ(as_set(enumerate_phases_kernel(edge3())), as_set(phases));
  EXPECT_EQ(reference::enumerate_phases(edge3()), phases);
}

TEST(Enumerate, LoosePathAndErrors) {
  EXPECT_EQ(enumerate_phases(loose_path()).size(), 9u);
  EXPECT_THROW(enumerate_phases(validate(3, 6, {{1, 2, 3}, {4, 5, 6}})), DisconnectedError);
  EXPECT_THROW(enumerate_phases_brute_force(loose_path(), 100), GuardExceeded);
  EXPECT_THROW(enumerate_phases(loose_path(), 100, false), GuardExceeded);
  EXPECT_EQ(enumerate_phases(loose_path(), 100, true).size(), 9u);
  EXPECT_THROW(enumerate_phases_kernel(gen_squid(3, 3), 80), GuardExceeded);
}

TEST(Enumerate, BruteForceKernelAndReferenceAgreeOnCorpus) {
  for (const auto& h : corpus()) {
    const auto card = cardinality(h);
    auto kernel = enumerate_phases_kernel(h);
    EXPECT_EQ(Integer(static_cast<unsigned long>(kernel.size())), card);
    if (power(h.uniformity(), h.num_vertices()) > default_enumeration_cap) continue;
    auto brute = enumerate_phases_brute_force(h);
    EXPECT_EQ(Integer(static_cast<unsigned long>(brute.size())), card);
    EXPECT_EQ(as_set(kernel), as_set(brute));
    EXPECT_TRUE(std::is_sorted(brute.begin(), brute.end()));
    if (h.num_vertices() <= 10) EXPECT_EQ(reference::enumerate_phases(h), brute);
  }
}

TEST(Enumerate, PhasesCertifyForBothOperators) {
  for (const auto& h : corpus()) {
    for (const auto& c : enumerate_phases(h)) {
      EXPECT_EQ(c[0], 0);
      EXPECT_TRUE(verify_phase(h, c, Operator::adjacency));
      EXPECT_TRUE(verify_phase(h, c, Operator::laplacian));
    }
  }
}

TEST(VerifyPhase, Examples) {
  EXPECT_TRUE(verify_phase(edge3(), {0, 1, 2}, Operator::adjacency));
  EXPECT_FALSE(verify_phase(edge3(), {0, 1, 1}, Operator::adjacency));
  EXPECT_FALSE(verify_phase(edge3(), {0, 1, 1}, Operator::laplacian));
  for (const auto& h : corpus())
    EXPECT_TRUE(verify_phase(h, PhaseVector(h.num_vertices(), 0), Operator::laplacian));
  EXPECT_FALSE(verify_phase(edge3(), {0, 0, 0}, Operator::signless_laplacian));
  auto e4 = validate(4, 4, {{1, 2, 3, 4}});
  EXPECT_TRUE(verify_phase(e4, {0, 0, 0, 2}, Operator::signless_laplacian));
  EXPECT_FALSE(verify_phase(e4, {0, 0, 0, 2}, Operator::adjacency));
}

TEST(PhaseEigenvector, Examples) {
  auto ones = phase_to_eigenvector(edge3(), {0, 0, 0}, Operator::laplacian);
  for (const auto& x : ones.x) EXPECT_EQ(x, Complex(1.0, 0.0));
  EXPECT_EQ(ones.residual, 0.0);
  EXPECT_EQ(ones.lambda, 0.0);
  EXPECT_LT(phase_to_eigenvector(edge3(), {0, 1, 2}, Operator::laplacian).residual, 1e-10);
  auto adj = phase_to_eigenvector(edge3(), {0, 1, 2}, Operator::adjacency);
  EXPECT_LT(adj.residual, 1e-10);
  EXPECT_NEAR(adj.lambda, 1.0, 1e-10);
  auto bad = phase_to_eigenvector(edge3(), {0, 1, 1}, Operator::laplacian);
  EXPECT_GT(bad.residual, 0.1);
}

TEST(PhaseEigenvector, ResidualsOnCorpus) {
  for (const auto& h : corpus()) {
    auto pd = perron(adjacency_tensor(h).cast<double>());
    for (const auto& c : enumerate_phases(h)) {
      EXPECT_LT(phase_to_eigenvector(h, c, Operator::adjacency, pd.u, pd.rho).residual, 1e-9);
      EXPECT_LT(phase_to_eigenvector(h, c, Operator::laplacian).residual, 1e-9);
    }
  }
}

TEST(FamilyOracle, Examples) {
  EXPECT_EQ(family_oracle(parse_family(std::string("hypertree k=3 m=4"))), 81);
  EXPECT_EQ(family_oracle(parse_family(std::string("sunflower k=3 s=1 p=2"))), 9);  // cored, n=5, m=2
  EXPECT_EQ(family_oracle(parse_family(std::string("complete n=5 k=3"))), 1);
  EXPECT_EQ(family_oracle(parse_family(std::string("squid k=3 t=3"))), 81);
  EXPECT_EQ(family_oracle(parse_family(std::string("power g=triangle k=3"))), 9);
}

TEST(FamilyOracle, MatchesCardinalityOnCorpus) {
  for (const auto& f : default_corpus()) EXPECT_EQ(family_oracle(f), cardinality(build_family(f))) << f.to_string();
}

TEST(FamilyOracle, Sweep) {
  std::vector<std::string> names;
  for (int k : {3, 4, 5})
    for (int t = 1; t <= k; ++t) names.push_back("squid k=" + std::to_string(k) + " t=" + std::to_string(t));
  for (int k : {3, 4, 6})
    for (int s = 1; s < k; ++s)
      for (int p = 1; p <= 4; ++p)
        names.push_back("sunflower k=" + std::to_string(k) + " s=" + std::to_string(s) + " p=" + std::to_string(p));
  for (int k : {3, 4, 5, 6})
    for (const char* g : {"path:3", "path:6", "triangle", "cycle:4", "cycle:5", "star:4", "petersen", "complete:4"})
      names.push_back(std::string("power g=") + g + " k=" + std::to_string(k));
  for (int k : {3, 4, 5})
    for (int m = 1; m <= 5; ++m) names.push_back("hypertree k=" + std::to_string(k) + " m=" + std::to_string(m));
  for (int n = 3; n <= 7; ++n) names.push_back("complete n=" + std::to_string(n) + " k=3");
  for (const auto& name : names) {
    auto f = parse_family(name);
    EXPECT_EQ(family_oracle(f), cardinality(build_family(f))) << name;
  }
}

TEST(Composite, Examples) {
  EXPECT_EQ(coalescence_formula(edge3(), edge3()), 9);
  EXPECT_EQ(cardinality(coalesce(edge3(), 3, edge3(), 1)), 9);
  EXPECT_EQ(cartesian_formula(edge3(), edge3()), 27);
  EXPECT_EQ(cardinality(cartesian(edge3(), edge3())), 27);
  EXPECT_EQ(snf_mod_k(incidence_matrix(cartesian(edge3(), edge3())), 3).rank, 5);
  EXPECT_EQ(enumerate_phases_brute_force(cartesian(edge3(), edge3())).size(), 27u);
}

TEST(Composite, RandomCartesianPairs) {
  std::mt19937 rng(20261016);
  int compared = 0;
  for (int k : {2, 3, 4, 6}) {
    std::vector<Hypergraph> pool;
    for (int i = 0; i < 6; ++i) {
      const int n = k + std::uniform_int_distribution<int>(0, 2 * k)(rng);
      pool.push_back(random_connected(rng, k, n, std::uniform_int_distribution<int>(0, 3)(rng)));
    }
    for (const auto& a : pool)
      for (const auto& b : pool) {
        if (a.num_vertices() * b.num_vertices() > 160) continue;
        EXPECT_EQ(cartesian_formula(a, b), cardinality(cartesian(a, b)));
        ++compared;
      }
  }
  EXPECT_GT(compared, 60);
}

TEST(Composite, RandomCoalescences) {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 3 + trial % 3;
    auto a = random_connected(rng, k, k + trial % 5, trial % 3);
    auto b = random_connected(rng, k, k + (trial * 3) % 5, trial % 2);
    const int v1 = 1 + trial % a.num_vertices(), v2 = 1 + (trial * 7) % b.num_vertices();
    EXPECT_EQ(cardinality(coalesce(a, v1, b, v2)), coalescence_formula(a, b));
  }
}

TEST(Properties, CardinalityDividesAndOneIffFullRank) {
  std::mt19937 rng(8);
  auto all = corpus();
  for (int i = 0; i < 30; ++i) all.push_back(random_connected(rng, 3 + i % 4, 6 + i % 5, i % 4));
  for (const auto& h : all) {
    auto d = describe(h);
    const Integer bound = Integer(static_cast<unsigned long>(power(h.uniformity(), h.num_vertices() - 1)));
    EXPECT_TRUE(mpz_divisible_p(bound.get_mpz_t(), d.cardinality.get_mpz_t()));
    EXPECT_GE(d.rank, 1);
    EXPECT_LE(d.rank, h.num_vertices() - 1);
    bool all_one = true;
    for (const auto& x : d.divisors) {
      EXPECT_EQ(h.uniformity() % x.get_si(), 0);
      all_one = all_one && x == 1;
    }
    EXPECT_EQ(d.cardinality == 1, d.rank == h.num_vertices() - 1 && all_one);
    Integer group = 1;
    for (const auto& g : d.group) group *= g;
    EXPECT_EQ(group, d.cardinality);
  }
}

TEST(SignlessZero, OddUniformityHasNoPhase) {
  for (const auto& h : {edge3(), loose_path(), gen_complete(5, 3), gen_squid(5, 2)}) {
    auto s = signless_zero(h, true);
    EXPECT_FALSE(s.zero_is_eigenvalue);
    EXPECT_TRUE(s.phases.empty());
  }
}

TEST(SignlessZero, SingleFourEdge) {
  auto e4 = validate(4, 4, {{1, 2, 3, 4}});
  auto s = signless_zero(e4, true);
  ASSERT_TRUE(s.zero_is_eigenvalue);
  EXPECT_FALSE(s.phases.empty());
  EXPECT_TRUE(std::find(s.phases.begin(), s.phases.end(), PhaseVector{0, 0, 0, 2}) != s.phases.end());
  for (const auto& c : s.phases) {
    EXPECT_TRUE(verify_phase(e4, c, Operator::signless_laplacian));
    EXPECT_LT(phase_to_eigenvector(e4, c, Operator::signless_laplacian).residual, 1e-10);
  }
}

TEST(SignlessZero, MatchesBruteForce) {
  std::vector<Hypergraph> cases{
      gen_power(path_graph(3), 4),  // k=4 path of two edges, n=7
      validate(4, 4, {{1, 2, 3, 4}}), gen_squid(4, 2), gen_sunflower(4, 2, 3), cartesian(gen_trivial(4), gen_sunflower(4, 1, 2)),
      as_hypergraph(path_graph(4)), as_hypergraph(cycle_graph(5)), as_hypergraph(cycle_graph(6)), as_hypergraph(petersen_graph())};
  for (const auto& h : cases) {
    const int k = h.uniformity(), n = h.num_vertices();
    std::set<PhaseVector> brute;
    PhaseVector c(n, 0);
    while (true) {
      bool ok = true;
      for (const auto& e : h.edges()) {
        int sum = 0;
        for (int v : e) sum += c[v];
        ok = ok && sum % k == k / 2;
      }
      if (ok) brute.insert(c);
      int pos = n - 1;
      while (pos >= 1 && ++c[pos] == k) c[pos--] = 0;
      if (pos < 1) break;
    }
    auto s = signless_zero(h, true);
    EXPECT_EQ(s.zero_is_eigenvalue, !brute.empty());
    EXPECT_EQ(as_set(s.phases), brute);
  }
}
