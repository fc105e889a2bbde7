#include "modfun/fdalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "modfun/errors.hpp"

namespace modfun {

// ----------------------------------------------------------------- algebra

Vec FinDimAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec out(dim, zero());
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar s = x[i] * y[j];
      const Vec& prod = c[i][j];
      for (std::size_t k = 0; k < dim; ++k) {
        if (!prod[k].is_zero()) out[k] += s * prod[k];
      }
    }
  }
  return out;
}

Matrix FinDimAlgebra::left_mult(const Vec& x) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(mul(x, basis_vector(j)));
  return Matrix::from_columns(cols, dim);
}

Matrix FinDimAlgebra::right_mult(const Vec& x) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(mul(basis_vector(j), x));
  return Matrix::from_columns(cols, dim);
}

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(f_" + std::to_string(i) + ",f_" + std::to_string(j) + ",f_" + std::to_string(k) + ")";
}

bool same(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] - b[i]).is_zero()) return false;
  }
  return true;
}

Vec sub(const Vec& a, const Vec& b) { return axpy(Scalar(-1), b, a); }

}  // namespace

Diagnostics validate_algebra(const FinDimAlgebra& a) {
  if (a.c.size() != a.dim) return {false, "structure constants have the wrong outer size"};
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (a.c[i].size() != a.dim) return {false, "structure constants row " + std::to_string(i) + " has the wrong size"};
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (a.c[i][j].size() != a.dim) {
        return {false, "product f_" + std::to_string(i) + " f_" + std::to_string(j) + " has the wrong length"};
      }
    }
  }
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Vec lhs = a.mul(a.c[i][j], a.basis_vector(k));
        const Vec rhs = a.mul(a.basis_vector(i), a.c[j][k]);
        if (!same(lhs, rhs)) return {false, "associativity fails on " + triple(i, j, k)};
      }
    }
  }
  if (a.identity.size() != a.dim) return {false, "identity has the wrong length"};
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Vec f = a.basis_vector(i);
    if (!same(a.mul(a.identity, f), f) || !same(a.mul(f, a.identity), f)) {
      return {false, "identity does not act as a unit on f_" + std::to_string(i)};
    }
  }
  return {};
}

std::optional<Vec> find_identity(const FinDimAlgebra& a) {
  const std::size_t d = a.dim;
  // Unknown u: sum_i u_i c[i][j] = f_j and sum_i u_i c[j][i] = f_j.
  Matrix m(2 * d * d, d);
  Vec rhs(2 * d * d, a.zero());
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t r1 = j * d + k;
      const std::size_t r2 = d * d + j * d + k;
      for (std::size_t i = 0; i < d; ++i) {
        m(r1, i) = a.c[i][j][k];
        m(r2, i) = a.c[j][i][k];
      }
      if (j == k) rhs[r1] = rhs[r2] = a.field.one();
    }
  }
  return solve(m, rhs);
}

Matrix Representation::act(const Vec& x) const {
  Matrix out(dim, dim);
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (!x[i].is_zero()) out = out + x[i] * matrices[i];
  }
  return out;
}

Diagnostics validate_representation(const FinDimAlgebra& a, const Representation& m) {
  if (m.matrices.size() != a.dim) return {false, "expected one matrix per basis element"};
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (m.matrices[i].rows() != m.dim || m.matrices[i].cols() != m.dim) {
      return {false, "matrix " + std::to_string(i) + " is not " + std::to_string(m.dim) + "x" + std::to_string(m.dim)};
    }
  }
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (!((m.matrices[i] * m.matrices[j]) - m.act(a.c[i][j])).is_zero()) {
        return {false, "rho(f_" + std::to_string(i) + ") rho(f_" + std::to_string(j) +
                           ") differs from rho(f_" + std::to_string(i) + " f_" + std::to_string(j) + ")"};
      }
    }
  }
  if (!(m.act(a.identity) - Matrix::identity(m.dim)).is_zero()) {
    return {false, "the identity of the algebra does not act as the identity matrix"};
  }
  return {};
}

Representation regular_module(const FinDimAlgebra& a) {
  Representation r;
  r.dim = a.dim;
  for (std::size_t i = 0; i < a.dim; ++i) r.matrices.push_back(a.left_mult(a.basis_vector(i)));
  return r;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.matrices.size() != b.matrices.size()) throw InputError("representations of different algebras");
  Representation r;
  r.dim = a.dim + b.dim;
  for (std::size_t i = 0; i < a.matrices.size(); ++i) {
    Matrix m(r.dim, r.dim);
    for (std::size_t x = 0; x < a.dim; ++x) {
      for (std::size_t y = 0; y < a.dim; ++y) m(x, y) = a.matrices[i](x, y);
    }
    for (std::size_t x = 0; x < b.dim; ++x) {
      for (std::size_t y = 0; y < b.dim; ++y) m(a.dim + x, a.dim + y) = b.matrices[i](x, y);
    }
    r.matrices.push_back(std::move(m));
  }
  return r;
}

// ------------------------------------------------------- radical and center

void require_trace_characteristic(const FinDimAlgebra& a) {
  const auto p = a.field.characteristic;
  if (p != 0 && p <= a.dim) {
    throw DomainError("characteristic " + std::to_string(p) + " must exceed the algebra dimension " +
                      std::to_string(a.dim) + " for the trace-form radical");
  }
}

std::vector<Vec> radical(const FinDimAlgebra& a) {
  require_trace_characteristic(a);
  const std::size_t d = a.dim;
  // Tr(L_{f_k}) = sum_j c[k][j][j]; the trace form is Tr(L_{f_i f_j}).
  Vec tr(d, a.zero());
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < d; ++j) tr[k] += a.c[k][j][j];
  }
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Scalar s = a.zero();
      for (std::size_t k = 0; k < d; ++k) s += a.c[i][j][k] * tr[k];
      g(i, j) = s;
    }
  }
  return span_basis(nullspace(g), d);
}

std::vector<Vec> center(const FinDimAlgebra& a) {
  const std::size_t d = a.dim;
  Matrix m(d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < d; ++j) m(i * d + k, j) = a.c[i][j][k] - a.c[j][i][k];
    }
  }
  return span_basis(nullspace(m), d);
}

UPoly minimal_polynomial(const FinDimAlgebra& a, const Vec& x, const Vec& e,
                         const std::vector<Vec>& mod) {
  std::vector<Vec> powers{e};
  for (std::size_t k = 1; k <= a.dim + 1; ++k) {
    const Vec next = a.mul(powers.back(), x);
    std::vector<Vec> cols = powers;
    cols.insert(cols.end(), mod.begin(), mod.end());
    if (auto sol = solve(Matrix::from_columns(cols, a.dim), next)) {
      std::vector<Scalar> coeffs(k + 1, a.zero());
      for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*sol)[i];
      coeffs[k] = a.field.one();
      return UPoly(std::move(coeffs));
    }
    powers.push_back(next);
  }
  throw InvariantViolation("minimal polynomial degree exceeds the algebra dimension");
}

// ------------------------------------------------------------------ blocks

namespace {

Vec eval_at(const FinDimAlgebra& a, const UPoly& q, const Vec& x, const Vec& e) {
  Vec acc(a.dim, a.zero());
  const auto& c = q.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = axpy(c[k], e, a.mul(acc, x));
  }
  return acc;
}

Vec random_element(const FinDimAlgebra& a, const std::vector<Vec>& basis, std::mt19937_64& rng) {
  Vec out(a.dim, a.zero());
  for (const auto& b : basis) {
    Scalar coef = a.field.is_rational()
                      ? Scalar(static_cast<long>(rng() % 17) - 8)
                      : Scalar::residue(static_cast<std::int64_t>(rng() % a.field.characteristic),
                                        a.field.characteristic);
    out = axpy(coef, b, out);
  }
  return out;
}

std::vector<Vec> products(const FinDimAlgebra& a, const Vec& e, const std::vector<Vec>& vs) {
  std::vector<Vec> out;
  for (const auto& v : vs) out.push_back(a.mul(e, v));
  return span_basis(out, a.dim);
}

std::size_t first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return i;
  }
  return v.size();
}

Vec lift_idempotent(const FinDimAlgebra& a, Vec eps) {
  for (int iter = 0; iter < 64; ++iter) {
    const Vec sq = a.mul(eps, eps);
    if (same(sq, eps)) return eps;
    const Vec cube = a.mul(sq, eps);
    eps = axpy(Scalar(-2), cube, scale(Scalar(3), sq));
  }
  throw InvariantViolation("idempotent lifting did not converge");
}

}  // namespace

std::vector<Vec> block_decomposition(const FinDimAlgebra& a, std::uint64_t seed) {
  const auto z = center(a);
  const auto rad = radical(a);
  const auto rad_z = intersect(z, rad, a.dim);
  std::mt19937_64 rng(seed);
  std::vector<Vec> out;

  std::function<void(const Vec&)> split = [&](const Vec& e) {
    const auto corner = products(a, e, z);
    const auto corner_rad = products(a, e, rad_z);
    const std::size_t r = corner.size() - corner_rad.size();
    if (r == 1) {
      out.push_back(e);
      return;
    }
    for (int attempt = 0; attempt < kPrimitiveRetries; ++attempt) {
      const Vec x = random_element(a, corner, rng);
      const auto fs = factor_univariate(minimal_polynomial(a, x, e, {}), a.field, rng());
      if (fs.size() >= 2) {
        UPoly rest = UPoly::constant(a.field.one());
        for (std::size_t i = 1; i < fs.size(); ++i) rest = rest * fs[i].factor;
        const auto inv = inverse_mod(rest, fs[0].factor);
        if (!inv) throw InvariantViolation("distinct irreducible factors are not coprime");
        const Vec eps = lift_idempotent(a, eval_at(a, rest * *inv, x, e));
        split(eps);
        split(sub(e, eps));
        return;
      }
      if (fs.size() == 1 && fs[0].factor.degree() == static_cast<int>(r)) {
        out.push_back(e);
        return;
      }
    }
    throw DomainError("no primitive element found in the center after " +
                      std::to_string(kPrimitiveRetries) + " random attempts");
  };
  split(a.identity);
  std::sort(out.begin(), out.end(), [](const Vec& x, const Vec& y) {
    const auto fx = first_nonzero(x);
    const auto fy = first_nonzero(y);
    if (fx != fy) return fx < fy;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == y[i]) continue;
      return x[i].to_string() < y[i].to_string();
    }
    return false;
  });
  return out;
}

// ----------------------------------------------------------------- verdicts

namespace {

BlockReport analyze_block(const FinDimAlgebra& a, const Vec& e, const std::vector<Vec>& rad,
                          const std::vector<Vec>& z, std::mt19937_64& rng) {
  BlockReport b;
  b.idempotent = e;
  std::vector<Vec> all;
  for (std::size_t k = 0; k < a.dim; ++k) all.push_back(a.basis_vector(k));
  const auto block = products(a, e, all);
  const auto block_rad = intersect(block, rad, a.dim);
  b.dim = block.size();
  b.radical_dim = block_rad.size();
  b.semisimple_dim = b.dim - b.radical_dim;
  b.center_dim = products(a, e, z).size();

  // W = {x in A_i : [x, f_k] in rad A for all k} maps onto Z(S_i).
  const auto ann = annihilator(rad, a.dim);
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < a.dim; ++k) {
    std::vector<Vec> comm;
    for (const auto& v : block) comm.push_back(sub(a.mul(v, all[k]), a.mul(all[k], v)));
    for (const auto& f : ann) {
      Vec row(block.size(), a.zero());
      for (std::size_t j = 0; j < block.size(); ++j) {
        for (std::size_t t = 0; t < a.dim; ++t) row[j] += f[t] * comm[j][t];
      }
      rows.push_back(std::move(row));
    }
  }
  std::vector<Vec> w;
  const auto coeffs = rows.empty() ? std::vector<Vec>{} : nullspace(Matrix::from_rows(rows, block.size()));
  if (rows.empty()) {
    w = block;
  } else {
    for (const auto& cvec : coeffs) {
      Vec x(a.dim, a.zero());
      for (std::size_t j = 0; j < block.size(); ++j) x = axpy(cvec[j], block[j], x);
      w.push_back(std::move(x));
    }
  }
  b.quotient_center_dim = span_basis(w, a.dim).size() - b.radical_dim;

  if (b.quotient_center_dim == 1) {
    b.quotient_simple = true;
  } else {
    bool decided = false;
    for (int attempt = 0; attempt < kPrimitiveRetries && !decided; ++attempt) {
      const Vec x = random_element(a, w, rng);
      const auto fs = factor_univariate(minimal_polynomial(a, x, e, block_rad), a.field, rng());
      if (fs.size() >= 2) {
        b.quotient_simple = false;
        decided = true;
      } else if (fs.size() == 1 && fs[0].factor.degree() == static_cast<int>(b.quotient_center_dim)) {
        b.quotient_simple = fs[0].multiplicity == 1;
        decided = true;
      }
    }
    if (!decided) {
      throw DomainError("no primitive element found for the center of a semisimple quotient after " +
                        std::to_string(kPrimitiveRetries) + " random attempts");
    }
  }
  if (b.quotient_simple) {
    if (b.semisimple_dim % b.quotient_center_dim != 0) {
      throw InvariantViolation("simple quotient dimension is not a multiple of its center");
    }
    const auto ratio = static_cast<std::int64_t>(b.semisimple_dim / b.quotient_center_dim);
    auto t = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(ratio))));
    while (t * t > ratio) --t;
    while ((t + 1) * (t + 1) <= ratio) ++t;
    if (t * t != ratio) throw InvariantViolation("simple quotient is not square over its center");
    b.t = t;
  }
  return b;
}

}  // namespace

bool has_separability_idempotent(const FinDimAlgebra& a) {
  const std::size_t d = a.dim;
  const std::size_t dd = d * d;
  const auto z = center(a);
  // N = span{z f_a (x) f_b - f_a (x) z f_b}.
  std::vector<Vec> n;
  for (const auto& zv : z) {
    for (std::size_t p = 0; p < d; ++p) {
      const Vec zp = a.mul(zv, a.basis_vector(p));
      for (std::size_t q = 0; q < d; ++q) {
        const Vec zq = a.mul(zv, a.basis_vector(q));
        Vec v(dd, a.zero());
        for (std::size_t k = 0; k < d; ++k) {
          v[k * d + q] += zp[k];
          v[p * d + k] -= zq[k];
        }
        n.push_back(std::move(v));
      }
    }
  }
  const auto ann = annihilator(span_basis(n, dd), dd);

  std::vector<Vec> rows;
  Vec rhs;
  // mu(e) = 1.
  for (std::size_t k = 0; k < d; ++k) {
    Vec row(dd, a.zero());
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = 0; q < d; ++q) row[p * d + q] = a.c[p][q][k];
    }
    rows.push_back(std::move(row));
    rhs.push_back(a.identity[k]);
  }
  // f_i e - e f_i in N.
  for (std::size_t i = 0; i < d; ++i) {
    Matrix t(dd, dd);
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = 0; q < d; ++q) {
        const std::size_t col = p * d + q;
        const Vec& left = a.c[i][p];
        const Vec& right = a.c[q][i];
        for (std::size_t k = 0; k < d; ++k) {
          if (!left[k].is_zero()) t(k * d + q, col) += left[k];
          if (!right[k].is_zero()) t(p * d + k, col) -= right[k];
        }
      }
    }
    for (const auto& f : ann) {
      Vec row(dd, a.zero());
      for (std::size_t r = 0; r < dd; ++r) {
        if (f[r].is_zero()) continue;
        for (std::size_t col = 0; col < dd; ++col) {
          if (!t(r, col).is_zero()) row[col] += f[r] * t(r, col);
        }
      }
      rows.push_back(std::move(row));
      rhs.push_back(a.zero());
    }
  }
  return solve(Matrix::from_rows(rows, dd), rhs).has_value();
}

AlgebraReport maximally_central_verdict(const FinDimAlgebra& a, std::uint64_t seed) {
  AlgebraReport rep;
  rep.radical_basis = radical(a);
  rep.center_basis = center(a);
  std::mt19937_64 rng(seed ^ 0x7665726469637473ULL);
  for (const auto& e : block_decomposition(a, seed)) {
    rep.blocks.push_back(analyze_block(a, e, rep.radical_basis, rep.center_basis, rng));
  }
  rep.is_maximally_central = std::all_of(rep.blocks.begin(), rep.blocks.end(), [](const BlockReport& b) {
    return b.quotient_simple && static_cast<std::int64_t>(b.dim) ==
                                    *b.t * *b.t * static_cast<std::int64_t>(b.center_dim);
  });
  if (rep.is_maximally_central) {
    const auto t0 = rep.blocks.front().t;
    rep.is_equidimensional = std::all_of(rep.blocks.begin(), rep.blocks.end(),
                                         [&](const BlockReport& b) { return b.t == t0; });
    if (rep.is_equidimensional) rep.common_t = t0;
  }
  rep.azumaya = has_separability_idempotent(a);
  if (rep.azumaya != rep.is_maximally_central) {
    throw InvariantViolation(std::string("maximally central verdict (") +
                             (rep.is_maximally_central ? "true" : "false") +
                             ") disagrees with the separability idempotent test (" +
                             (rep.azumaya ? "true" : "false") + ")");
  }
  return rep;
}

// ----------------------------------------------------------------- modules

HomSpace hom_space(const FinDimAlgebra& a, const Representation& m1, const Representation& m2) {
  const std::size_t r1 = m1.dim;
  const std::size_t r2 = m2.dim;
  HomSpace h;
  if (r1 == 0 || r2 == 0) return h;
  const std::size_t n = r1 * r2;  // S[r][c] at r * r1 + c
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Matrix& p = m1.matrices[i];
    const Matrix& q = m2.matrices[i];
    for (std::size_t r = 0; r < r2; ++r) {
      for (std::size_t c = 0; c < r1; ++c) {
        Vec row(n, a.zero());
        for (std::size_t k = 0; k < r1; ++k) row[r * r1 + k] += p(k, c);
        for (std::size_t k = 0; k < r2; ++k) row[k * r1 + c] -= q(r, k);
        rows.push_back(std::move(row));
      }
    }
  }
  for (const auto& v : nullspace(Matrix::from_rows(rows, n))) {
    Matrix s(r2, r1);
    for (std::size_t r = 0; r < r2; ++r) {
      for (std::size_t c = 0; c < r1; ++c) s(r, c) = v[r * r1 + c];
    }
    h.basis.push_back(std::move(s));
  }
  h.dim = h.basis.size();
  return h;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("inverse of a non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1);
  }
  const Rref red = rref(std::move(aug));
  if (red.pivots.size() < n || red.pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  }
  return inv;
}

namespace {

struct Complement {
  std::vector<std::size_t> units;  // unit vectors completing the ideal basis
  Matrix to_coords;                // inverse of [ideal | units]
};

Complement complement_of(const std::vector<Vec>& ideal, std::size_t n) {
  Complement c;
  std::vector<Vec> basis = span_basis(ideal, n);
  const std::size_t k = basis.size();
  for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
    const Vec u = unit_vec(n, i);
    if (!in_span(basis, u)) {
      basis.push_back(u);
      c.units.push_back(i);
    }
  }
  c.to_coords = inverse(Matrix::from_columns(basis, n));
  // Keep only the rows giving coordinates along the complement.
  Matrix rows(n - k, n);
  for (std::size_t r = 0; r < n - k; ++r) {
    for (std::size_t col = 0; col < n; ++col) rows(r, col) = c.to_coords(k + r, col);
  }
  c.to_coords = std::move(rows);
  return c;
}

}  // namespace

FinDimAlgebra quotient_algebra(const FinDimAlgebra& a, const std::vector<Vec>& ideal) {
  const Complement comp = complement_of(ideal, a.dim);
  FinDimAlgebra q;
  q.field = a.field;
  q.dim = comp.units.size();
  q.c.assign(q.dim, std::vector<Vec>(q.dim));
  for (std::size_t i = 0; i < q.dim; ++i) {
    for (std::size_t j = 0; j < q.dim; ++j) {
      q.c[i][j] = comp.to_coords * a.c[comp.units[i]][comp.units[j]];
    }
  }
  q.identity = comp.to_coords * a.identity;
  return q;
}

std::pair<FinDimAlgebra, Representation> faithful_quotient(const FinDimAlgebra& a,
                                                           const Representation& m) {
  const std::size_t mm = m.dim * m.dim;
  std::vector<Vec> ann;
  if (mm == 0) {
    for (std::size_t i = 0; i < a.dim; ++i) ann.push_back(a.basis_vector(i));
  } else {
    Matrix k(mm, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
      for (std::size_t r = 0; r < m.dim; ++r) {
        for (std::size_t c = 0; c < m.dim; ++c) k(r * m.dim + c, i) = m.matrices[i](r, c);
      }
    }
    ann = nullspace(k);
  }
  const Complement comp = complement_of(ann, a.dim);
  FinDimAlgebra q = quotient_algebra(a, ann);
  Representation rep{m.dim, {}};
  for (auto u : comp.units) rep.matrices.push_back(m.matrices[u]);
  return {std::move(q), std::move(rep)};
}

std::pair<Representation, Representation> sub_quotient_reps(const FinDimAlgebra& a,
                                                             const Representation& m,
                                                             const std::vector<Vec>& subspace) {
  const std::size_t n = m.dim;
  for (const auto& v : subspace) {
    if (v.size() != n) throw InputError("subspace vector has the wrong length");
  }
  const auto sub_basis = span_basis(subspace, n);
  for (const auto& rho : m.matrices) {
    for (const auto& v : sub_basis) {
      if (!in_span(sub_basis, rho * v)) throw InputError("subspace is not invariant");
    }
  }
  std::vector<Vec> basis = sub_basis;
  for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
    const Vec u = unit_vec(n, i);
    if (!in_span(basis, u)) basis.push_back(u);
  }
  const Matrix p = Matrix::from_columns(basis, n);
  const Matrix pinv = inverse(p);
  const std::size_t s = sub_basis.size();
  Representation sub_rep{s, {}};
  Representation quot_rep{n - s, {}};
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Matrix conj = pinv * m.matrices[i] * p;
    Matrix top(s, s);
    Matrix bottom(n - s, n - s);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (r < s && c < s) top(r, c) = conj(r, c);
        else if (r >= s && c >= s) bottom(r - s, c - s) = conj(r, c);
        else if (r >= s && c < s && !conj(r, c).is_zero()) {
          throw InvariantViolation("invariant subspace produced a non-triangular block");
        }
      }
    }
    sub_rep.matrices.push_back(std::move(top));
    quot_rep.matrices.push_back(std::move(bottom));
  }
  return {sub_rep, quot_rep};
}

}  // namespace modfun
