#pragma once

#include <span>
#include <vector>

#include "modfun/linalg.hpp"
#include "modfun/modvec.hpp"

namespace modfun {

/// Dense matrix of polynomials; column c is the image of the c-th basis
/// vector, so an r x c matrix is a map R^c -> R^r.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  static PolyMatrix from_columns(const std::vector<ModVector>& cols, std::size_t rows,
                                 std::size_t nvars);
  static PolyMatrix from_scalars(const Matrix& m, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ModVector column(std::size_t c) const;
  std::vector<ModVector> columns() const;
  bool is_zero() const;
  PolyMatrix transpose() const;
  /// Entries evaluated at a point of k^nvars.
  Matrix evaluate(std::span<const Scalar> point) const;
  /// Horizontal concatenation [*this | rhs].
  PolyMatrix hconcat(const PolyMatrix& rhs) const;

  void remove_row(std::size_t r);
  void remove_col(std::size_t c);

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Polynomial> data_;
};

}  // namespace modfun
