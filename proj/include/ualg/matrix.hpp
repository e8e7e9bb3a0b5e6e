#pragma once

#include <string>
#include <vector>

#include "ualg/finite_algebra.hpp"

namespace ualg {

// Matrix over a finite ring given as an algebra with designated add/product.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> entries;  // row-major

  Matrix() = default;
  Matrix(int r, int c, std::vector<int> e);

  int at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }
  int& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const Matrix&) const = default;
};

struct MatrixRing {
  FiniteAlgebra ring;
  size_t add;
  size_t product;

  MatrixRing(FiniteAlgebra r, std::string_view add_sym, std::string_view product_sym);
};

// (a rc b)_ij = sum_k a_ik b_kj  -- product of rows over columns.
Matrix rc_product(const MatrixRing& r, const Matrix& a, const Matrix& b);
// (a cr b)_ij = sum_k a_ki b_jk  -- product of columns over rows.
Matrix cr_product(const MatrixRing& r, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix matrix_sum(const MatrixRing& r, const Matrix& a, const Matrix& b);
Matrix matrix_identity(const MatrixRing& r, int n);

// (a rc b)^T == a^T cr b^T
bool transpose_product_law(const MatrixRing& r, const Matrix& a, const Matrix& b);

}  // namespace ualg
