#include "modfun/linalg.hpp"

#include <algorithm>

#include "modfun/errors.hpp"

namespace modfun {

Matrix Matrix::identity(std::size_t n, const Scalar& one) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InputError("ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix dimensions do not match");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        if (!rhs(k, c).is_zero()) out(r, c) += a * rhs(k, c);
      }
    }
  }
  return out;
}

Vec Matrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector dimensions do not match");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix dimensions do not match");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (Scalar(-1) * rhs); }

Matrix operator*(const Scalar& c, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= c;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Eliminates column `col` from every row except `pivot_row`.
void eliminate(Matrix& m, std::size_t pivot_row, std::size_t col, bool parallel) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto body = [&](std::size_t r) {
    if (r == pivot_row || m(r, col).is_zero()) return;
    const Scalar factor = m(r, col);
    for (std::size_t c = col; c < cols; ++c) {
      if (!m(pivot_row, c).is_zero()) m(r, c) -= factor * m(pivot_row, c);
    }
  };
  if (parallel) {
    const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static) if (rows > 64)
    for (std::ptrdiff_t r = 0; r < n; ++r) body(static_cast<std::size_t>(r));
  } else {
    for (std::size_t r = 0; r < rows; ++r) body(r);
  }
}

Rref rref_impl(Matrix m, bool parallel) {
  Rref out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    eliminate(m, row, col, parallel);
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

}  // namespace

Rref rref(Matrix m) { return rref_impl(std::move(m), true); }

Rref rref_serial(Matrix m) { return rref_impl(std::move(m), false); }

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> nullspace(const Matrix& m) {
  const Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw InputError("right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Rref red = rref(std::move(aug));
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = red.reduced(i, m.cols());
  return x;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t n) {
  if (vectors.empty()) return {};
  const Rref r = rref(Matrix::from_rows(vectors, n));
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < r.pivots.size(); ++i) basis.push_back(r.reduced.row(i));
  return basis;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  std::vector<Vec> rows = basis;
  rows.push_back(v);
  return rank(Matrix::from_rows(rows, v.size())) == rank(Matrix::from_rows(basis, v.size()));
}

std::vector<Vec> annihilator(const std::vector<Vec>& basis, std::size_t n) {
  if (basis.empty()) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vec(n, i));
    return all;
  }
  return nullspace(Matrix::from_rows(basis, n));
}

std::vector<Vec> intersect(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t n) {
  // x in both iff every annihilator of either kills x.
  std::vector<Vec> eqs = annihilator(a, n);
  const std::vector<Vec> eb = annihilator(b, n);
  eqs.insert(eqs.end(), eb.begin(), eb.end());
  if (eqs.empty()) return span_basis(a, n);
  return span_basis(nullspace(Matrix::from_rows(eqs, n)), n);
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec axpy(const Scalar& a, const Vec& x, const Vec& y) {
  Vec out = y;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) out[i] += a * x[i];
  }
  return out;
}

Vec scale(const Scalar& a, const Vec& x) {
  Vec out = x;
  for (auto& s : out) s *= a;
  return out;
}

}  // namespace modfun
