#include "hyperspec/smith.hpp"

namespace hyperspec {

namespace {

struct Workspace {
  IntegerMatrix a;
  IntegerMatrix u;
  IntegerMatrix v;

  // row_dst += q * row_src, mirrored on U.
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) += q * a(src, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += q * u(src, j);
  }
  // col_dst += q * col_src, mirrored on V.
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) += q * a(i, src);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) += q * v(i, src);
  }
  void swap_rows(std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    u.swap_rows(x, y);
  }
  void swap_cols(std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    v.swap_cols(x, y);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
  }
};

}  // namespace

IntegerMatrix to_integer_matrix(const Matrix<int>& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

SnfResult snf_integer(const IntegerMatrix& b) {
  const std::size_t rows = b.rows();
  const std::size_t cols = b.cols();
  Workspace w{b, IntegerMatrix::identity(rows), IntegerMatrix::identity(cols)};
  auto& a = w.a;
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Smallest nonzero |entry| in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a(i, j)) != 0 && (pr == rows || mpz_cmpabs(a(i, j).get_mpz_t(), a(pr, pc).get_mpz_t()) < 0)) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;  // trailing block is zero
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);
      if (sgn(a(t, t)) < 0) w.negate_row(t);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        w.add_row(i, t, -q);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        w.add_col(j, t, -q);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder became the next pivot

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            w.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }

  SnfResult result;
  result.invariants.reserve(diag);
  for (std::size_t t = 0; t < diag; ++t) result.invariants.push_back(a(t, t));
  result.u = std::move(w.u);
  result.v = std::move(w.v);
  return result;
}

}  // namespace hyperspec
