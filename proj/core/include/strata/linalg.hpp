#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace strata {

using Rational = mpq_class;

// Dense row-major matrix over Q. Zero-sized shapes are legal everywhere.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix column(const std::vector<Rational>& v);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Rational& s) const;
  Matrix& operator+=(const Matrix& rhs);
  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  Matrix transpose() const;
  bool is_zero() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;

  // Entries in row-major order.
  const std::vector<Rational>& data() const { return data_; }
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& a, std::size_t e);

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
Rational determinant(Matrix m);
Rational trace(const Matrix& m);

// Columns spanning the kernel of m (cols() == m.cols()).
Matrix nullspace(const Matrix& m);
// Linearly independent columns of m spanning its column space.
Matrix column_basis(const Matrix& m);
// Some X with a * X == b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

// Subspaces of Q^n are represented by a matrix whose columns form a basis.
Matrix subspace_sum(const Matrix& a, const Matrix& b);
Matrix subspace_intersection(const Matrix& a, const Matrix& b);
bool subspace_contains(const Matrix& big, const Matrix& small);
// Columns c such that [basis | c] is a basis of Q^n.
Matrix complement_basis(const Matrix& basis, std::size_t n);

// Row vector of coordinates picking a basis representation: for a matrix
// `basis` with independent columns, returns L with L * basis == I.
Matrix left_inverse(const Matrix& basis);

}  // namespace strata
