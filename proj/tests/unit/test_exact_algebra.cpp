#include <gtest/gtest.h>

#include <random>

#include "hyperspec/exact_linalg.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/macaulay.hpp"
#include "hyperspec/modular.hpp"
#include "hyperspec/roots.hpp"
#include "hyperspec/smith.hpp"
#include "hyperspec/unipoly.hpp"

using namespace hyperspec;

namespace {

Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

UniPoly poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return UniPoly(std::move(c));
}

RationalMatrix rational_matrix(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

IntegerMatrix integer_matrix(const std::vector<std::vector<long>>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound, int max_den) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, max_den);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = frac(num(rng), den(rng));
  return m;
}

void expect_snf(const IntegerMatrix& b, const std::vector<long>& expected) {
  auto r = snf_integer(b);
  std::vector<Integer> want(expected.begin(), expected.end());
  EXPECT_EQ(r.invariants, want);
  auto d = r.u * b * r.v;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) EXPECT_EQ(d(i, j), i == j ? r.invariants[i] : Integer(0));
}

Integer abs_det(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  Rational d = determinant(r);
  return abs(d.get_num());
}

}  // namespace

TEST(Charpoly, SmallExamples) {
  EXPECT_EQ(charpoly_matrix(rational_matrix({{0, 1}, {1, 0}})), poly({-1, 0, 1}));
  EXPECT_EQ(charpoly_matrix(RationalMatrix::identity(3)), pow(poly({-1, 1}), 3));
  EXPECT_EQ(charpoly_matrix(RationalMatrix()), poly({1}));
  EXPECT_THROW(charpoly_matrix(RationalMatrix(2, 3)), InputError);
}

TEST(Charpoly, FrozenRandomIntegerMatrix) {
  auto m = rational_matrix({{-5, 8, 7, 4}, {8, 0, 5, -4}, {-6, 9, 7, -2}, {7, -1, -8, -4}});
  auto expected = poly({4742, -461, -158, 2, 1});
  EXPECT_EQ(charpoly_matrix(m), expected);
  EXPECT_EQ(reference::charpoly_matrix(m), expected);
  // det(tI - M) at t = 0..4
  const long values[] = {4742, 4126, 3220, 2072, 754};
  for (int t = 0; t <= 4; ++t) EXPECT_EQ(expected(Rational(t)), Rational(values[t]));
}

TEST(Charpoly, FrozenRationalMatrix) {
  RationalMatrix m(3, 3);
  m(0, 0) = frac(1, 2);
  m(0, 1) = frac(-1, 3);
  m(1, 0) = frac(2, 5);
  m(1, 1) = 1;
  m(1, 2) = frac(1, 7);
  m(2, 0) = 3;
  m(2, 2) = frac(-1, 2);
  UniPoly expected({frac(193, 420), frac(-7, 60), Rational(-1), Rational(1)});
  EXPECT_EQ(charpoly_matrix(m), expected);
  EXPECT_EQ(reference::charpoly_matrix(m), expected);
  EXPECT_EQ(determinant(m), frac(-193, 420));
}

TEST(Charpoly, MultimodularMatchesInterpolation) {
  std::mt19937 rng(11);
  for (std::size_t dim : {1u, 2u, 5u, 9u, 16u, 24u}) {
    auto m = random_matrix(rng, dim, dim, 50, dim % 2 ? 6 : 1);
    EXPECT_EQ(charpoly_matrix(m), reference::charpoly_matrix(m)) << "dim " << dim;
  }
  // Entries near 2^80 force many primes.
  RationalMatrix big(6, 6);
  Integer e = 1;
  e <<= 80;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) big(i, j) = Rational(e * static_cast<long>(i * 7 + j * 3 + 1) - 12345);
  EXPECT_EQ(charpoly_matrix(big), reference::charpoly_matrix(big));
}

TEST(Charpoly, ConstantTermIsSignedDeterminant) {
  std::mt19937 rng(3);
  for (std::size_t dim : {3u, 7u, 12u}) {
    auto m = random_matrix(rng, dim, dim, 9, 4);
    Rational sign = dim % 2 ? -1 : 1;
    EXPECT_EQ(charpoly_matrix(m).coeff(0), sign * determinant(m));
  }
  // Macaulay matrices of corpus tensors up to dimension 300.
  for (const auto& f : default_corpus()) {
    auto h = build_family(f);
    if (basis_size(h.num_vertices(), h.uniformity()) > 300) continue;
    for (auto op : {Operator::adjacency, Operator::laplacian}) {
      auto m = macaulay_matrices(hypergraph_tensor(h, op)).m;
      Rational sign = m.rows() % 2 ? -1 : 1;
      EXPECT_EQ(charpoly_matrix(m).coeff(0), sign * determinant(m)) << f.to_string();
    }
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(nullity_rational(RationalMatrix(3, 3, Rational(0))), 3u);
  EXPECT_EQ(nullity_rational(RationalMatrix::identity(4)), 0u);
  EXPECT_EQ(nullity_rational(rational_matrix({{1, 1}, {1, 1}})), 1u);
  EXPECT_EQ(rank(rational_matrix({{1, 2, 3}, {2, 4, 6}})), 1u);
  EXPECT_EQ(nullity_rational(rational_matrix({{1, 2, 3}, {2, 4, 6}})), 2u);
}

TEST(Rank, MultimodularMatchesBareiss) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t rows = 3 + trial, cols = 4 + (trial * 7) % 9, inner = 1 + trial % 5;
    auto a = random_matrix(rng, rows, inner, 30, 3);
    auto b = random_matrix(rng, inner, cols, 30, 3);
    auto m = a * b;
    EXPECT_EQ(rank(m), reference::rank(m));
    EXPECT_LE(rank(m), inner);
  }
}

TEST(Division, Examples) {
  EXPECT_EQ(exact_div(poly({-1, 0, 1}), poly({-1, 1})), poly({1, 1}));
  auto f = poly({3, -2, 0, 7});
  EXPECT_EQ(exact_div(f, f), poly({1}));
  EXPECT_THROW(exact_div(poly({0, 0, 0, 1}), poly({-1, 1})), InvariantViolation);
  EXPECT_THROW(divmod(f, UniPoly()), InputError);
  auto qr = divmod(poly({0, 0, 0, 1}), poly({-1, 1}));
  EXPECT_EQ(qr.quotient * poly({-1, 1}) + qr.remainder, poly({0, 0, 0, 1}));
  EXPECT_EQ(qr.remainder, poly({1}));
}

TEST(Gcd, Examples) {
  auto a = poly({-1, 1}) * poly({2, 1});
  auto b = poly({-1, 1}) * poly({-3, 1});
  EXPECT_EQ(gcd(a, b), poly({-1, 1}));
  EXPECT_EQ(gcd(poly({1, 1}), poly({-1, 1})), poly({1}));
  EXPECT_EQ(gcd(UniPoly(), UniPoly()), UniPoly());
  EXPECT_EQ(gcd(UniPoly(), poly({4, 2})), poly({2, 1}));
}

TEST(Squarefree, Examples) {
  auto f = pow(poly({-1, 1}), 3) * poly({2, 1});
  auto d = squarefree_decompose(f);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].factor, poly({2, 1}));
  EXPECT_EQ(d[0].multiplicity, 1);
  EXPECT_EQ(d[1].factor, poly({-1, 1}));
  EXPECT_EQ(d[1].multiplicity, 3);

  auto g = poly({-2, 0, 1});
  auto dg = squarefree_decompose(g);
  ASSERT_EQ(dg.size(), 1u);
  EXPECT_EQ(dg[0].factor, g);
  EXPECT_EQ(dg[0].multiplicity, 1);

  auto x5 = squarefree_decompose(UniPoly::monomial(1, 5));
  ASSERT_EQ(x5.size(), 1u);
  EXPECT_EQ(x5[0].factor, poly({0, 1}));
  EXPECT_EQ(x5[0].multiplicity, 5);

  EXPECT_TRUE(squarefree_decompose(poly({7})).empty());
  EXPECT_THROW(squarefree_decompose(UniPoly()), InputError);
}

TEST(Squarefree, RandomProductsReconstruct) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> root(-6, 6), mult(1, 4), count(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly f = UniPoly::constant(frac(-3, 7));
    const int factors = count(rng);
    for (int i = 0; i < factors; ++i) f = f * pow(poly({root(rng), 1}), mult(rng));
    f = f * pow(poly({1, 0, 1}), trial % 3);  // irreducible quadratic
    auto d = squarefree_decompose(f);
    UniPoly product = UniPoly::constant(f.leading());
    for (std::size_t i = 0; i < d.size(); ++i) {
      product = product * pow(d[i].factor, d[i].multiplicity);
      EXPECT_EQ(gcd(d[i].factor, d[i].factor.derivative()), poly({1}));
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        EXPECT_EQ(gcd(d[i].factor, d[j].factor), poly({1}));
        EXPECT_LT(d[i].multiplicity, d[j].multiplicity);
      }
    }
    EXPECT_EQ(product, f);
    EXPECT_EQ(squarefree_part(f).degree(), [&] {
      int deg = 0;
      for (const auto& s : d) deg += s.factor.degree();
      return deg;
    }());
  }
}

TEST(Sturm, Counts) {
  auto f = poly({-1, 1}) * poly({-2, 1}) * poly({-3, 1});
  SturmSequence s(f);
  EXPECT_EQ(s.count_real_roots(), 3);
  EXPECT_EQ(s.count_roots(Rational(0), Rational(2)), 2);  // (0, 2]
  EXPECT_EQ(s.count_roots(Rational(1), Rational(2)), 1);
  EXPECT_EQ(s.count_roots_above(Rational(5, 2)), 1);
  EXPECT_EQ(SturmSequence(poly({1, 0, 1})).count_real_roots(), 0);
  EXPECT_EQ(SturmSequence(poly({-2, 0, 1}) * poly({1, 0, 1})).count_real_roots(), 2);
  // Negative leading coefficient.
  EXPECT_EQ(SturmSequence(poly({6, -5, 1}) * poly({-1})).count_real_roots(), 2);
}

TEST(Roots, Examples) {
  const Rational precision = frac(1, 100000000);
  auto sqrt2 = isolate_largest_real_root(poly({-2, 0, 1}), precision);
  EXPECT_LE(sqrt2.width(), precision);
  EXPECT_LT(sqrt2.lo.get_d(), 1.41421356237);
  EXPECT_GE(sqrt2.hi.get_d(), 1.41421356237);
  EXPECT_NEAR(sqrt2.hi.get_d(), 1.41421356, 1e-8);

  auto three = isolate_largest_real_root(poly({-3, 1}), precision);
  EXPECT_TRUE(three.exact());
  EXPECT_EQ(three.lo, 3);

  auto cubic = isolate_largest_real_root(poly({-1, 1}) * poly({-2, 1}) * poly({-3, 1}), frac(1, 1024));
  EXPECT_TRUE(cubic.lo <= 3 && 3 <= cubic.hi);
  EXPECT_GT(cubic.lo, 2);

  EXPECT_THROW(isolate_largest_real_root(poly({1, 0, 1}), precision), InputError);
  EXPECT_THROW(isolate_largest_real_root(poly({-2, 1}), Rational(0)), InputError);
}

TEST(Roots, IsolatingIntervalProperties) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coef(-20, 20);
  const Rational precision = frac(1, 1 << 20);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> c;
    for (int i = 0; i < 6; ++i) c.emplace_back(coef(rng));
    c.emplace_back(1 + trial % 3);
    UniPoly f(c);
    f = f * poly({coef(rng), 1});  // at least one real root
    auto r = isolate_largest_real_root(f, precision);
    EXPECT_LE(r.width(), precision);
    auto g = squarefree_part(f);
    SturmSequence s(g);
    EXPECT_EQ(s.count_roots_above(r.hi), 0);
    if (r.exact()) {
      EXPECT_EQ(f(r.lo), 0);
    } else {
      EXPECT_EQ(s.count_roots(r.lo, r.hi), 1);
      EXPECT_NE(sgn(g(r.lo)) * sgn(g(r.hi)), 1);
    }
    ++checked;
  }
  EXPECT_EQ(checked, 60);
}

TEST(Snf, Examples) {
  expect_snf(integer_matrix({{1, 1, 1}}), {1});
  expect_snf(integer_matrix({{1, 1, 1, 0, 0}, {0, 0, 1, 1, 1}}), {1, 1});
  expect_snf(integer_matrix({{2, 0}, {0, 4}}), {2, 4});
  expect_snf(integer_matrix({{4, 0}, {0, 6}}), {2, 12});
  expect_snf(integer_matrix({{0, 0}, {0, 0}}), {0, 0});
  expect_snf(integer_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), {2, 6, 12});
}

TEST(Snf, RandomWitnessesAndRank) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + trial % 6, cols = 1 + (trial * 5) % 7;
    IntegerMatrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) b(i, j) = trial % 4 == 0 ? entry(rng) * 2 : entry(rng);
    auto r = snf_integer(b);
    ASSERT_EQ(r.invariants.size(), std::min(rows, cols));
    auto d = r.u * b * r.v;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) EXPECT_EQ(d(i, j), i == j ? r.invariants[i] : Integer(0));
    for (std::size_t i = 0; i < r.invariants.size(); ++i) {
      EXPECT_GE(r.invariants[i], 0);
      if (r.invariants[i] != 0) ++nonzero;
      if (i + 1 < r.invariants.size()) {
        if (r.invariants[i] == 0) {
          EXPECT_EQ(r.invariants[i + 1], 0);
        } else {
          EXPECT_TRUE(mpz_divisible_p(r.invariants[i + 1].get_mpz_t(), r.invariants[i].get_mpz_t()));
        }
      }
    }
    RationalMatrix q(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) q(i, j) = b(i, j);
    EXPECT_EQ(nonzero, rank(q));
    EXPECT_EQ(abs_det(r.u), 1);
    EXPECT_EQ(abs_det(r.v), 1);
  }
}

TEST(Modular, Primitives) {
  using namespace modular;
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(1000000007));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  auto primes = primes_for_bits(200);
  EXPECT_GE(primes.size(), 4u);
  for (u64 p : primes) {
    EXPECT_TRUE(is_prime(p));
    EXPECT_LT(p, u64(1) << 62);
    EXPECT_EQ(mul_mod(inv_mod(123456789, p), 123456789, p), 1u);
    ShoupMultiplier w(987654321987ULL % p, p);
    EXPECT_EQ(w(p - 1), mul_mod(p - 1, 987654321987ULL % p, p));
  }
  CrtReconstructor crt(primes);
  Integer x("-123456789012345678901234567890123456789");
  std::vector<u64> residues;
  for (u64 p : primes) {
    Integer r = x % Integer(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    residues.push_back(r.get_ui());
  }
  EXPECT_EQ(crt.reconstruct(residues), x);
}
