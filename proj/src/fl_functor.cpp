#include "modfun/fl_functor.hpp"

#include "modfun/errors.hpp"

namespace modfun {

std::vector<std::string> fl_variable_names(std::size_t d, std::size_t l) {
  std::vector<std::string> names(d * l);
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      names[fl_variable(i, j, d)] = "x" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
    }
  }
  return names;
}

PolyMatrix generic_element(const FinDimAlgebra& a, const Representation& m, std::size_t j,
                           std::size_t l) {
  if (j >= l) throw InputError("generic element index out of range");
  const std::size_t nvars = a.dim * l;
  PolyMatrix id(m.dim, m.dim, nvars);
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Matrix& rho = m.matrices[i];
    for (std::size_t r = 0; r < m.dim; ++r) {
      for (std::size_t c = 0; c < m.dim; ++c) {
        if (!rho(r, c).is_zero()) id(r, c) += Polynomial::variable(nvars, fl_variable(i, j, a.dim), rho(r, c));
      }
    }
  }
  return id;
}

ModuleOrder GradedPresentation::default_order() const {
  return ModuleOrder::top(RingOrder::deglex_reversed(nvars), m);
}

GradedQuotient GradedPresentation::quotient(const ModuleOrder& order) const {
  GradedQuotient q;
  q.rank = m;
  q.nvars = nvars;
  q.gen_degrees.assign(m, 0);
  q.order = order;
  for (auto& col : relations.columns()) {
    if (!col.is_zero()) q.relations.push_back(std::move(col));
  }
  return q;
}

GradedPresentation build_presentation(const FinDimAlgebra& a, const Representation& m,
                                      std::size_t l) {
  if (l == 0) throw InputError("l must be positive");
  if (a.dim * l > kMaxVars) throw GuardError("too many variables for the monomial representation");
  const Diagnostics diag = validate_representation(a, m);
  if (!diag.ok) throw InputError("invalid representation: " + diag.message);
  GradedPresentation p;
  p.d = a.dim;
  p.l = l;
  p.m = m.dim;
  p.nvars = a.dim * l;
  p.var_names = fl_variable_names(a.dim, l);
  p.relations = PolyMatrix(m.dim, 0, p.nvars);
  for (std::size_t j = 0; j < l; ++j) p.relations = p.relations.hconcat(generic_element(a, m, j, l));
  return p;
}

Diagnostics check_specialization(const FinDimAlgebra& a, const GradedPresentation& p) {
  const Vec zero(p.nvars, a.field.zero());
  if (!p.relations.evaluate(zero).is_zero()) return {false, "zero point does not give the zero matrix"};
  for (std::size_t j = 0; j < p.l; ++j) {
    Vec point = zero;
    for (std::size_t i = 0; i < p.d; ++i) point[fl_variable(i, j, p.d)] = a.identity[i];
    const Matrix s = p.relations.evaluate(point);
    for (std::size_t r = 0; r < p.m; ++r) {
      for (std::size_t c = 0; c < p.l * p.m; ++c) {
        const bool in_block = c / p.m == j;
        Scalar want = in_block && c % p.m == r ? a.field.one() : a.field.zero();
        if (!(s(r, c) - want).is_zero()) {
          return {false, "identity point of copy " + std::to_string(j + 1) + " fails at entry (" +
                             std::to_string(r) + "," + std::to_string(c) + ")"};
        }
      }
    }
  }
  return {};
}

HomologicalReport invariants(const GradedPresentation& p, const ModuleOrder& order,
                             const ResolutionOptions& opts) {
  return homological_report(p.quotient(order), opts);
}

HomologicalReport invariants(const FinDimAlgebra& a, const Representation& m, std::size_t l,
                             const ResolutionOptions& opts) {
  const GradedPresentation p = build_presentation(a, m, l);
  return invariants(p, p.default_order(), opts);
}

HomSpace hom0(const FinDimAlgebra& a, const Representation& m1, const Representation& m2,
              std::size_t l) {
  for (const auto* m : {&m1, &m2}) {
    const Diagnostics diag = validate_representation(a, *m);
    if (!diag.ok) throw InputError("invalid representation: " + diag.message);
  }
  const std::size_t r1 = m1.dim, r2 = m2.dim;
  const std::size_t nt = r2 * r1;             // T[r][s] at r * r1 + s
  const std::size_t nc = (l * r2) * (l * r1);  // C[s][c] at nt + s * l r1 + c
  HomSpace out;
  if (nt == 0) return out;
  // The coefficient of x_ij in T [Id^1] is T rho1(f_i) in block j; in
  // [Id^2] C it is rho2(f_i) times the j-th block row of C.
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Matrix& p1 = m1.matrices[i];
    const Matrix& p2 = m2.matrices[i];
    for (std::size_t j = 0; j < l; ++j) {
      for (std::size_t r = 0; r < r2; ++r) {
        for (std::size_t c = 0; c < l * r1; ++c) {
          Vec row(nt + nc, a.field.zero());
          bool any = false;
          if (c / r1 == j) {
            for (std::size_t s = 0; s < r1; ++s) {
              if (p1(s, c % r1).is_zero()) continue;
              row[r * r1 + s] += p1(s, c % r1);
              any = true;
            }
          }
          for (std::size_t s = 0; s < r2; ++s) {
            if (p2(r, s).is_zero()) continue;
            row[nt + (j * r2 + s) * (l * r1) + c] -= p2(r, s);
            any = true;
          }
          if (any) rows.push_back(std::move(row));
        }
      }
    }
  }
  std::vector<Vec> sols;
  if (rows.empty()) {
    for (std::size_t k = 0; k < nt + nc; ++k) sols.push_back(unit_vec(nt + nc, k));
  } else {
    sols = nullspace(Matrix::from_rows(rows, nt + nc));
  }
  std::vector<Vec> ts;
  for (const auto& s : sols) ts.emplace_back(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(nt));
  for (const auto& t : span_basis(ts, nt)) {
    Matrix m(r2, r1);
    for (std::size_t r = 0; r < r2; ++r) {
      for (std::size_t s = 0; s < r1; ++s) m(r, s) = t[r * r1 + s];
    }
    out.basis.push_back(std::move(m));
  }
  out.dim = out.basis.size();
  return out;
}

HilbertSeries exactness_defect(const FinDimAlgebra& a, const Representation& m,
                               const std::vector<Vec>& subspace, std::size_t l) {
  const auto [sub, quot] = sub_quotient_reps(a, m, subspace);
  auto hs = [&](const Representation& r) { return hs_presented(build_presentation(a, r, l).quotient()); };
  const HilbertSeries defect = hs(sub) + hs(quot) - hs(m);
  const auto coeffs = defect.expand(32);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] < 0) {
      throw InvariantViolation("exactness defect has a negative coefficient in degree " + std::to_string(k));
    }
  }
  return defect;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 20) throw GuardError("determinant expansion limited to 20 x 20");
  // minors[S] = det of the first |S| rows restricted to the columns in S.
  std::vector<Polynomial> minors(std::size_t{1} << n, Polynomial(m.nvars()));
  minors[0] = Polynomial::constant(m.nvars(), Scalar(1));
  for (std::size_t s = 1; s < minors.size(); ++s) {
    // Laplace expansion along the last row of the submatrix.
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(s)) - 1;
    Polynomial acc(m.nvars());
    std::size_t idx = 0;  // position of column c among the columns of S
    for (std::size_t c = 0; c < n; ++c) {
      if (!(s >> c & 1)) continue;
      const Polynomial& minor = minors[s & ~(std::size_t{1} << c)];
      if (!m(row, c).is_zero() && !minor.is_zero()) {
        if ((row + idx) % 2 == 0) acc += m(row, c) * minor;
        else acc -= m(row, c) * minor;
      }
      ++idx;
    }
    minors[s] = std::move(acc);
  }
  return minors.back();
}

bool det_annihilates(const FinDimAlgebra& a, const Representation& m) {
  const GradedPresentation p = build_presentation(a, m, 1);
  if (p.m == 0) return true;
  const Polynomial det = determinant(p.relations);
  const GradedQuotient q = p.quotient(ModuleOrder::standard(p.nvars, p.m));
  const Submodule gb = buchberger(q.relations, q.order, q.rank, q.nvars);
  for (std::size_t k = 0; k < p.m; ++k) {
    const ModVector v = det * ModVector::unit(p.m, p.nvars, static_cast<std::uint32_t>(k));
    if (!contains(v, gb)) return false;
  }
  return true;
}

Diagnostics validate_lie(const LieAlgebra& g) {
  const std::size_t d = g.dim;
  if (g.c.size() != d) return {false, "bracket table has the wrong outer size"};
  for (const auto& row : g.c) {
    if (row.size() != d) return {false, "bracket table row has the wrong size"};
    for (const auto& v : row) {
      if (v.size() != d) return {false, "bracket has the wrong length"};
    }
  }
  auto name = [](std::size_t i) { return "e_" + std::to_string(i); };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (!(g.c[i][j][k] + g.c[j][i][k]).is_zero()) {
          return {false, "antisymmetry fails on (" + name(i) + "," + name(j) + ")"};
        }
      }
    }
  }
  auto bracket = [&](const Vec& x, const Vec& y) {
    Vec out(d, g.field.zero());
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (y[j].is_zero()) continue;
        out = axpy(x[i] * y[j], g.c[i][j], out);
      }
    }
    return out;
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const Vec ei = unit_vec(d, i), ej = unit_vec(d, j), ek = unit_vec(d, k);
        Vec sum = bracket(ei, g.c[j][k]);
        sum = axpy(Scalar(1), bracket(ej, g.c[k][i]), sum);
        sum = axpy(Scalar(1), bracket(ek, g.c[i][j]), sum);
        if (!is_zero(sum)) {
          return {false, "Jacobi identity fails on (" + name(i) + "," + name(j) + "," + name(k) + ")"};
        }
      }
    }
  }
  return {};
}

GradedPresentation lie_bracket_presentation(const LieAlgebra& g) {
  const Diagnostics diag = validate_lie(g);
  if (!diag.ok) throw InputError("not a Lie algebra: " + diag.message);
  if (g.dim > kMaxVars) throw GuardError("too many variables for the monomial representation");
  GradedPresentation p;
  p.d = g.dim;
  p.l = 1;
  p.m = g.dim;
  p.nvars = g.dim;
  p.var_names.clear();
  for (std::size_t i = 0; i < g.dim; ++i) p.var_names.push_back("x" + std::to_string(i + 1));
  p.relations = PolyMatrix(g.dim, g.dim, g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) {
    for (std::size_t j = 0; j < g.dim; ++j) {
      for (std::size_t k = 0; k < g.dim; ++k) {
        if (!g.c[i][j][k].is_zero()) p.relations(k, j) += Polynomial::variable(g.dim, i, g.c[i][j][k]);
      }
    }
  }
  return p;
}

}  // namespace modfun
