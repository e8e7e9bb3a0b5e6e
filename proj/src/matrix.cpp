#include "ualg/matrix.hpp"

namespace ualg {

Matrix::Matrix(int r, int c, std::vector<int> e) : rows(r), cols(c), entries(std::move(e)) {
  if (rows <= 0 || cols <= 0) fail(ErrorCode::shape, "matrix dimensions must be positive");
  if (static_cast<long long>(entries.size()) != static_cast<long long>(rows) * cols)
    fail(ErrorCode::shape, "matrix entry count mismatch");
}

MatrixRing::MatrixRing(FiniteAlgebra r, std::string_view add_sym, std::string_view product_sym)
    : ring(std::move(r)), add(ring.domain().require(add_sym)),
      product(ring.domain().require(product_sym)) {
  if (ring.domain().op(add).arity != 2 || ring.domain().op(product).arity != 2)
    fail(ErrorCode::shape, "ring add/product must be binary");
}

namespace {

void check_entries(const MatrixRing& r, const Matrix& m) {
  for (int v : m.entries)
    if (v < 0 || v >= r.ring.size()) fail(ErrorCode::shape, "matrix entry out of ring carrier");
}

}  // namespace

Matrix rc_product(const MatrixRing& r, const Matrix& a, const Matrix& b) {
  check_entries(r, a);
  check_entries(r, b);
  if (a.cols != b.rows) fail(ErrorCode::shape, "rc product: cols(a) != rows(b)");
  Matrix out(a.rows, b.cols, std::vector<int>(static_cast<size_t>(a.rows) * b.cols, 0));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      int acc = r.ring.apply2(r.product, a.at(i, 0), b.at(0, j));
      for (int k = 1; k < a.cols; ++k)
        acc = r.ring.apply2(r.add, acc, r.ring.apply2(r.product, a.at(i, k), b.at(k, j)));
      out.at(i, j) = acc;
    }
  return out;
}

Matrix cr_product(const MatrixRing& r, const Matrix& a, const Matrix& b) {
  check_entries(r, a);
  check_entries(r, b);
  if (a.rows != b.cols) fail(ErrorCode::shape, "cr product: rows(a) != cols(b)");
  // (a cr b)[i][j] = sum_k a[k][j] * b[i][k]: column j of a over row i of b.
  Matrix out(b.rows, a.cols, std::vector<int>(static_cast<size_t>(b.rows) * a.cols, 0));
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      int acc = r.ring.apply2(r.product, a.at(0, j), b.at(i, 0));
      for (int k = 1; k < a.rows; ++k)
        acc = r.ring.apply2(r.add, acc, r.ring.apply2(r.product, a.at(k, j), b.at(i, k)));
      out.at(i, j) = acc;
    }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols, a.rows, std::vector<int>(a.entries.size(), 0));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
  return out;
}

Matrix matrix_sum(const MatrixRing& r, const Matrix& a, const Matrix& b) {
  check_entries(r, a);
  check_entries(r, b);
  if (a.rows != b.rows || a.cols != b.cols) fail(ErrorCode::shape, "sum: dimension mismatch");
  Matrix out = a;
  for (size_t i = 0; i < out.entries.size(); ++i)
    out.entries[i] = r.ring.apply2(r.add, a.entries[i], b.entries[i]);
  return out;
}

Matrix matrix_identity(const MatrixRing& r, int n) {
  int e = op_neutral(r.ring, r.product);
  int z = op_neutral(r.ring, r.add);
  if (e < 0 || z < 0) fail(ErrorCode::structure, "ring lacks identities for delta");
  Matrix out(n, n, std::vector<int>(static_cast<size_t>(n) * n, z));
  for (int i = 0; i < n; ++i) out.at(i, i) = e;
  return out;
}

bool transpose_product_law(const MatrixRing& r, const Matrix& a, const Matrix& b) {
  return transpose(rc_product(r, a, b)) == cr_product(r, transpose(a), transpose(b));
}

}  // namespace ualg
