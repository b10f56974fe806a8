#pragma once

#include <vector>

#include "hyperspec/exact_linalg.hpp"

namespace hyperspec {

/// Smith normal form U * B * V = diag(invariants) over the integers.
/// invariants has min(rows, cols) entries, nonnegative, each dividing the
/// next, zeros last. U and V are unimodular.
struct SnfResult {
  std::vector<Integer> invariants;
  IntegerMatrix u;
  IntegerMatrix v;
};

/// Pivots on the entry of smallest nonzero absolute value to limit growth.
SnfResult snf_integer(const IntegerMatrix& b);

IntegerMatrix to_integer_matrix(const Matrix<int>& m);

}  // namespace hyperspec
