#include "modfun/poly_matrix.hpp"

#include <algorithm>

#include "modfun/errors.hpp"

namespace modfun {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Polynomial(nvars)) {}

PolyMatrix PolyMatrix::from_columns(const std::vector<ModVector>& cols, std::size_t rows,
                                    std::size_t nvars) {
  PolyMatrix m(rows, cols.size(), nvars);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].rank() != rows) throw InputError("column has the wrong rank");
    auto comps = cols[c].components();
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = std::move(comps[r]);
  }
  return m;
}

PolyMatrix PolyMatrix::from_scalars(const Matrix& s, std::size_t nvars) {
  PolyMatrix m(s.rows(), s.cols(), nvars);
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (std::size_t c = 0; c < s.cols(); ++c) m(r, c) = Polynomial::constant(nvars, s(r, c));
  }
  return m;
}

ModVector PolyMatrix::column(std::size_t c) const {
  std::vector<Polynomial> comps(rows_);
  for (std::size_t r = 0; r < rows_; ++r) comps[r] = (*this)(r, c);
  return ModVector::from_components(comps, nvars_);
}

std::vector<ModVector> PolyMatrix::columns() const {
  std::vector<ModVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, nvars_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix PolyMatrix::evaluate(std::span<const Scalar> point) const {
  Matrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).evaluate(point);
  }
  return m;
}

PolyMatrix PolyMatrix::hconcat(const PolyMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw InputError("row counts differ in concatenation");
  PolyMatrix out(rows_, cols_ + rhs.cols_, nvars_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, cols_ + c) = rhs(r, c);
  }
  return out;
}

void PolyMatrix::remove_row(std::size_t r) {
  const auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  data_.erase(first, first + static_cast<std::ptrdiff_t>(cols_));
  --rows_;
}

void PolyMatrix::remove_col(std::size_t c) {
  std::vector<Polynomial> out;
  out.reserve(rows_ * (cols_ - 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (k != c) out.push_back(std::move(data_[r * cols_ + k]));
    }
  }
  data_ = std::move(out);
  --cols_;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace modfun
