#pragma once

// Dense exact linear algebra over the rationals.  Sizes here are tiny (inner
// product matrices, boundary matrices of desk-scale complexes).

#include <cstddef>
#include <optional>
#include <vector>

#include "graphcx/graded.hpp"

namespace graphcx {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Scalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  Matrix transposed() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

/// Gauss-Jordan inverse; nullopt when singular or not square.
std::optional<Matrix> inverse(const Matrix& m);

/// Rank by fraction-free (Bareiss) elimination.  Rows are first scaled to
/// integers, so every intermediate value stays integral.
int rank(const Matrix& m);

}  // namespace graphcx
