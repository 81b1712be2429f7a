#pragma once
/// Exact linear algebra: dense blocks, sparse rows, deterministic row reduction.

#include "hominduce/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hominduce {

/// Sorted (index, value) pairs; never stores zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;
using DenseVec = std::vector<Scalar>;

/// y += a * x.
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Scalar& a);
SparseVec to_sparse(const DenseVec& v);
DenseVec to_dense(const SparseVec& v, int n);
Scalar dot(const SparseVec& a, const SparseVec& b);
/// Entry at index i, zero when absent.
Scalar coeff(const SparseVec& v, int i);

/** Dense row-major matrix of Scalars. */
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
  static Matrix identity(int n);

  Scalar& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

  bool is_zero() const;
  DenseVec column(int c) const;
  SparseVec sparse_column(int c) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);

/// Rows of a sparse matrix with a fixed column count.
struct SparseMatrix {
  int cols = 0;
  std::vector<SparseVec> rows;
};

SparseMatrix to_sparse(const Matrix& m);

/**
 * Reduced row echelon form. Pivots are searched column by column from the left,
 * taking the lowest-indexed remaining row; pivoting is restricted to columns < pivot_limit.
 */
struct Echelon {
  std::vector<SparseVec> rows;  ///< nonzero reduced rows, pivot entry 1
  std::vector<int> pivots;      ///< pivot column of each row
};
Echelon rref(std::vector<SparseVec> rows, int pivot_limit);

int rank(const Matrix& m);
/// Kernel basis: one vector per free column, free variable set to 1.
std::vector<DenseVec> kernel_basis(const Matrix& m);
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);
/// Image basis: the pivot columns of the original matrix.
std::vector<DenseVec> image_basis(const Matrix& m);

/// Particular solution of A x = b with every free variable zero, or nullopt.
std::optional<DenseVec> solve(const SparseMatrix& a, const DenseVec& b);

/// When A x = b is inconsistent: y with yA = 0 and y.b = 1.
std::optional<DenseVec> inconsistency_witness(const SparseMatrix& a, const DenseVec& b);

/// Inverse of a square matrix; nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace hominduce
