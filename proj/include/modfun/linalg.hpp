#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "modfun/scalar.hpp"

namespace modfun {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n, const Scalar& one = Scalar(1));
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& rhs) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  friend Matrix operator*(const Scalar& c, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form. The elimination step is OpenMP-parallel over
/// rows; rref_serial is the sequential reference.
Rref rref(Matrix m);
Rref rref_serial(Matrix m);

std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vec> nullspace(const Matrix& m);
/// Some solution of m x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Echelon basis of the span of the given vectors (length n each).
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t n);
bool in_span(const std::vector<Vec>& basis, const Vec& v);
std::vector<Vec> intersect(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t n);
/// Linear functionals (as rows) whose common kernel is span(basis).
std::vector<Vec> annihilator(const std::vector<Vec>& basis, std::size_t n);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec axpy(const Scalar& a, const Vec& x, const Vec& y);  // a x + y
Vec scale(const Scalar& a, const Vec& x);

}  // namespace modfun
