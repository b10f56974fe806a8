#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperspec/error.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/scalar.hpp"

namespace hyperspec {

/// Number of distinct orderings of a sorted index multiset.
inline std::int64_t multiset_permutations(std::span<const int> sorted) {
  std::int64_t result = 1;
  std::int64_t position = 0;
  std::int64_t run = 0;
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    run = (t > 0 && sorted[t] == sorted[t - 1]) ? run + 1 : 1;
    ++position;
    result = result * position / run;
  }
  return result;
}

/// Order-k, dimension-n tensor whose value is invariant under permuting the
/// trailing k-1 indices. Entries are stored once per class (row, sorted
/// tail). Every tensor the library builds (A, L, Q, the identity and their
/// diagonal triple products) has this structure; fully symmetric tensors
/// are the special case checked by is_symmetric().
template <Scalar S>
class CubicalTensor {
 public:
  /// [row, tail_1 <= ... <= tail_{k-1}], 0-based.
  using Key = std::vector<int>;

  CubicalTensor(int order, int dim) : order_(order), dim_(dim) {
    if (order < 2) throw InputError("tensor order must be at least 2");
    if (dim < 1) throw InputError("tensor dimension must be at least 1");
  }

  static CubicalTensor identity(int order, int dim) {
    CubicalTensor t(order, dim);
    for (int i = 0; i < dim; ++i) t.set(std::vector<int>(order, i), scalar_from_int<S>(1));
    return t;
  }

  int order() const { return order_; }
  int dim() const { return dim_; }

  /// Sets a_{i, sigma(tail)} = value for every permutation sigma.
  void set(std::span<const int> index, const S& value) {
    Key key = make_key(index);
    if (is_zero(value)) {
      classes_.erase(key);
    } else {
      classes_[std::move(key)] = value;
    }
  }

  void add(std::span<const int> index, const S& value) {
    Key key = make_key(index);
    auto it = classes_.find(key);
    S sum = it == classes_.end() ? value : S(it->second + value);
    if (is_zero(sum)) {
      if (it != classes_.end()) classes_.erase(it);
    } else if (it == classes_.end()) {
      classes_.emplace(std::move(key), sum);
    } else {
      it->second = sum;
    }
  }

  S at(std::span<const int> index) const {
    auto it = classes_.find(make_key(index));
    return it == classes_.end() ? scalar_from_int<S>(0) : it->second;
  }

  const std::map<Key, S>& classes() const { return classes_; }

  /// Number of nonzero entries of the expanded k-way array.
  std::size_t nnz() const {
    std::size_t count = 0;
    for (const auto& [key, value] : classes_)
      count += static_cast<std::size_t>(multiset_permutations(std::span<const int>(key).subspan(1)));
    return count;
  }

  /// Calls f(index, value) for every nonzero entry of the expanded array
  /// in lexicographic index order.
  template <class F>
  void for_each_entry(F&& f) const {
    std::vector<std::pair<std::vector<int>, const S*>> all;
    for (const auto& [key, value] : classes_) {
      std::vector<int> tail(key.begin() + 1, key.end());
      do {
        std::vector<int> index{key[0]};
        index.insert(index.end(), tail.begin(), tail.end());
        all.emplace_back(std::move(index), &value);
      } while (std::next_permutation(tail.begin(), tail.end()));
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [index, value] : all) f(std::span<const int>(index), *value);
  }

  template <Scalar T>
  CubicalTensor<T> cast() const {
    CubicalTensor<T> out(order_, dim_);
    for (const auto& [key, value] : classes_) out.set(key, scalar_cast<T>(value));
    return out;
  }

  /// True iff every entry equals the entry at every permutation of its index.
  bool is_symmetric() const {
    for (const auto& [key, value] : classes_) {
      for (int t = 1; t < order_; ++t) {
        Key swapped = key;
        std::swap(swapped[0], swapped[t]);
        if (!(at(swapped) == value)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const CubicalTensor& a, const CubicalTensor& b) {
    return a.order_ == b.order_ && a.dim_ == b.dim_ && a.classes_ == b.classes_;
  }

 private:
  Key make_key(std::span<const int> index) const {
    if (static_cast<int>(index.size()) != order_) throw InputError("tensor index has wrong length");
    for (int i : index)
      if (i < 0 || i >= dim_) throw InputError("tensor index out of range");
    Key key(index.begin(), index.end());
    std::sort(key.begin() + 1, key.end());
    return key;
  }

  int order_;
  int dim_;
  std::map<Key, S> classes_;
};

template <Scalar S>
bool is_nonnegative(const CubicalTensor<S>& t) {
  for (const auto& [key, value] : t.classes())
    if (value < 0) return false;
  return true;
}

/// The polynomials F_i(x) = (T x^{k-1})_i, one term per stored class:
/// coefficient = entry value times the number of orderings of its tail.
template <Scalar S>
struct RowPolynomials {
  int order = 0;
  int dim = 0;
  std::vector<std::size_t> offsets;  // terms of row i are [offsets[i], offsets[i+1])
  std::vector<int> tails;            // (order - 1) sorted indices per term
  std::vector<S> coefficients;

  std::span<const int> tail(std::size_t term) const {
    return std::span<const int>(tails).subspan(term * (order - 1), order - 1);
  }
};

template <Scalar S>
RowPolynomials<S> row_polynomials(const CubicalTensor<S>& t) {
  RowPolynomials<S> rp;
  rp.order = t.order();
  rp.dim = t.dim();
  rp.offsets.assign(t.dim() + 1, 0);
  for (const auto& [key, value] : t.classes()) {
    ++rp.offsets[key[0] + 1];
    rp.tails.insert(rp.tails.end(), key.begin() + 1, key.end());
    auto count = multiset_permutations(std::span<const int>(key).subspan(1));
    rp.coefficients.push_back(S(value * scalar_from_int<S>(count)));
  }
  std::partial_sum(rp.offsets.begin(), rp.offsets.end(), rp.offsets.begin());
  return rp;
}

/// y = T x^{k-1} on precompiled row polynomials.
template <Scalar S>
std::vector<S> apply(const RowPolynomials<S>& rp, std::span<const S> x) {
  if (static_cast<int>(x.size()) != rp.dim) throw InputError("apply: vector length does not match tensor dimension");
  std::vector<S> y(rp.dim, scalar_from_int<S>(0));
#pragma omp parallel for schedule(static) if (rp.dim >= 256)
  for (int i = 0; i < rp.dim; ++i) {
    S acc = scalar_from_int<S>(0);
    for (std::size_t term = rp.offsets[i]; term < rp.offsets[i + 1]; ++term) {
      S prod = rp.coefficients[term];
      for (int j : rp.tail(term)) prod = S(prod * x[j]);
      acc = S(acc + prod);
    }
    y[i] = acc;
  }
  return y;
}

template <Scalar S>
std::vector<S> apply(const CubicalTensor<S>& t, std::span<const S> x) {
  return hyperspec::apply(row_polynomials(t), x);
}

/// x^{[p]}: componentwise power.
template <Scalar S>
std::vector<S> power_vector(std::span<const S> x, int p) {
  std::vector<S> out;
  out.reserve(x.size());
  for (const auto& xi : x) {
    S v = scalar_from_int<S>(1);
    for (int e = 0; e < p; ++e) v = S(v * xi);
    out.push_back(v);
  }
  return out;
}

/// Strong connectivity of the digraph with arcs i -> j whenever a nonzero
/// entry a_{i i_2 ... i_k} has j among i_2..i_k.
template <Scalar S>
bool weakly_irreducible(const CubicalTensor<S>& t) {
  const int n = t.dim();
  std::vector<std::vector<int>> out(n), in(n);
  for (const auto& [key, value] : t.classes()) {
    for (std::size_t s = 1; s < key.size(); ++s) {
      if (key[s] == key[0]) continue;
      out[key[0]].push_back(key[s]);
      in[key[s]].push_back(key[0]);
    }
  }
  auto reaches_all = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
    }
    return count == n;
  };
  return reaches_all(out) && reaches_all(in);
}

/// Diagonal matrix stored as its diagonal.
template <Scalar S>
struct DiagonalScaling {
  std::vector<S> diag;

  static DiagonalScaling identity(int n) { return {std::vector<S>(n, scalar_from_int<S>(1))}; }

  /// D^p for integer p, negative powers by field inversion.
  DiagonalScaling power(int p) const {
    DiagonalScaling out{diag};
    for (auto& d : out.diag) {
      if (is_zero(d)) throw InputError("diagonal scaling has a zero entry");
      S base = p < 0 ? S(scalar_from_int<S>(1) / d) : d;
      S v = scalar_from_int<S>(1);
      for (int e = 0; e < (p < 0 ? -p : p); ++e) v = S(v * base);
      d = v;
    }
    return out;
  }
};

/// (P T Q)_{i_1..i_k} = p_{i_1} a_{i_1..i_k} q_{i_2} ... q_{i_k}.
template <Scalar S>
CubicalTensor<S> triple_product(const DiagonalScaling<S>& p, const CubicalTensor<S>& t,
                                const DiagonalScaling<S>& q) {
  const auto n = static_cast<std::size_t>(t.dim());
  if (p.diag.size() != n || q.diag.size() != n) throw InputError("triple product: scaling size mismatch");
  for (const auto* d : {&p, &q})
    for (const auto& v : d->diag)
      if (is_zero(v)) throw InputError("triple product: zero diagonal entry");
  CubicalTensor<S> out(t.order(), t.dim());
  for (const auto& [key, value] : t.classes()) {
    S v = S(p.diag[key[0]] * value);
    for (std::size_t s = 1; s < key.size(); ++s) v = S(v * q.diag[key[s]]);
    out.set(key, v);
  }
  return out;
}

/// D^{-(k-1)} T D, which has the same spectrum as T.
template <Scalar S>
CubicalTensor<S> diagonal_similarity(const CubicalTensor<S>& t, const DiagonalScaling<S>& d) {
  return triple_product(d.power(-(t.order() - 1)), t, d);
}

// Hypergraph tensors (exact).

CubicalTensor<Rational> adjacency_tensor(const Hypergraph& h);
CubicalTensor<Rational> degree_tensor(const Hypergraph& h);
CubicalTensor<Rational> laplacian_tensor(const Hypergraph& h);
CubicalTensor<Rational> signless_laplacian_tensor(const Hypergraph& h);

enum class Operator { adjacency, laplacian, signless_laplacian };

std::string to_string(Operator op);
Operator parse_operator(const std::string& name);
CubicalTensor<Rational> hypergraph_tensor(const Hypergraph& h, Operator op);

/// One line per nonzero entry: 1-based indices, numerator, denominator;
/// lexicographic index order.
void dump_tensor(const CubicalTensor<Rational>& t, std::ostream& out);

}  // namespace hyperspec
