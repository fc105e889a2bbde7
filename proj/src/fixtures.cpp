#include "modfun/fixtures.hpp"

#include <algorithm>

#include "modfun/errors.hpp"

namespace modfun::fixtures {

namespace {

FinDimAlgebra empty_algebra(FieldSpec field, std::size_t d) {
  FinDimAlgebra a;
  a.field = field;
  a.dim = d;
  a.c.assign(d, std::vector<Vec>(d, Vec(d, field.zero())));
  a.identity = Vec(d, field.zero());
  return a;
}

Matrix zero_matrix(FieldSpec field, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = field.zero();
  }
  return m;
}

LieAlgebra empty_lie(FieldSpec field, std::size_t d) {
  return {field, d, std::vector<std::vector<Vec>>(d, std::vector<Vec>(d, Vec(d, field.zero())))};
}

}  // namespace

FinDimAlgebra ground_field(FieldSpec field) {
  FinDimAlgebra a = empty_algebra(field, 1);
  a.c[0][0][0] = field.one();
  a.identity[0] = field.one();
  return a;
}

FinDimAlgebra matrix_algebra(std::size_t n, FieldSpec field) {
  if (n == 0) throw InputError("matrix algebra of size 0");
  FinDimAlgebra a = empty_algebra(field, n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t s = 0; s < n; ++s) a.c[p * n + q][q * n + s][p * n + s] = field.one();
    }
    a.identity[p * n + p] = field.one();
  }
  return a;
}

FinDimAlgebra quaternions(FieldSpec field) {
  FinDimAlgebra a = empty_algebra(field, 4);
  // table[i][j] = (sign, index) of f_i f_j for the basis 1, i, j, k.
  static constexpr int table[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      a.c[i][j][table[i][j][1]] = field.from_int(table[i][j][0]);
    }
  }
  a.identity[0] = field.one();
  return a;
}

FinDimAlgebra upper_triangular(std::size_t n, FieldSpec field) {
  if (n == 0) throw InputError("upper triangular algebra of size 0");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, 0));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p; q < n; ++q) {
      index[p][q] = units.size();
      units.emplace_back(p, q);
    }
  }
  FinDimAlgebra a = empty_algebra(field, units.size());
  for (std::size_t x = 0; x < units.size(); ++x) {
    for (std::size_t y = 0; y < units.size(); ++y) {
      if (units[x].second == units[y].first) {
        a.c[x][y][index[units[x].first][units[y].second]] = field.one();
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) a.identity[index[p][p]] = field.one();
  return a;
}

FinDimAlgebra truncated_polynomial(std::size_t k, FieldSpec field) {
  if (k == 0) throw InputError("k[x]/(x^0) is the zero ring");
  FinDimAlgebra a = empty_algebra(field, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; i + j < k; ++j) a.c[i][j][i + j] = field.one();
  }
  a.identity[0] = field.one();
  return a;
}

FinDimAlgebra dual_numbers(FieldSpec field) { return truncated_polynomial(2, field); }

FinDimAlgebra diagonal(std::size_t n, FieldSpec field) {
  if (n == 0) throw InputError("diagonal algebra of size 0");
  FinDimAlgebra a = empty_algebra(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    a.c[i][i][i] = field.one();
    a.identity[i] = field.one();
  }
  return a;
}

FinDimAlgebra product(const FinDimAlgebra& a, const FinDimAlgebra& b) {
  if (!(a.field == b.field)) throw InputError("product of algebras over different fields");
  FinDimAlgebra p = empty_algebra(a.field, a.dim + b.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      for (std::size_t k = 0; k < a.dim; ++k) p.c[i][j][k] = a.c[i][j][k];
    }
    p.identity[i] = a.identity[i];
  }
  for (std::size_t i = 0; i < b.dim; ++i) {
    for (std::size_t j = 0; j < b.dim; ++j) {
      for (std::size_t k = 0; k < b.dim; ++k) p.c[a.dim + i][a.dim + j][a.dim + k] = b.c[i][j][k];
    }
    p.identity[a.dim + i] = b.identity[i];
  }
  return p;
}

Representation standard_module(const FinDimAlgebra& a, std::size_t n) {
  Representation r{n, {}};
  if (a.dim == n * n) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        Matrix m = zero_matrix(a.field, n);
        m(p, q) = a.field.one();
        r.matrices.push_back(std::move(m));
      }
    }
  } else if (a.dim == n * (n + 1) / 2) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p; q < n; ++q) {
        Matrix m = zero_matrix(a.field, n);
        m(p, q) = a.field.one();
        r.matrices.push_back(std::move(m));
      }
    }
  } else {
    throw InputError("no standard module of dimension " + std::to_string(n));
  }
  return r;
}

Representation one_dimensional(const FinDimAlgebra& a, std::size_t index) {
  Representation r{1, {}};
  for (std::size_t i = 0; i < a.dim; ++i) {
    Matrix m(1, 1);
    m(0, 0) = i == index ? a.field.one() : a.field.zero();
    r.matrices.push_back(std::move(m));
  }
  return r;
}

Representation on_first_factor(const FinDimAlgebra& a, const FinDimAlgebra& b,
                               const Representation& m) {
  Representation r = m;
  for (std::size_t i = 0; i < b.dim; ++i) r.matrices.push_back(zero_matrix(a.field, m.dim));
  return r;
}

Representation on_second_factor(const FinDimAlgebra& a, const FinDimAlgebra& b,
                                const Representation& m) {
  Representation r{m.dim, {}};
  for (std::size_t i = 0; i < a.dim; ++i) r.matrices.push_back(zero_matrix(b.field, m.dim));
  for (const auto& x : m.matrices) r.matrices.push_back(x);
  return r;
}

PolyMatrix quaternion_u(std::size_t i, std::size_t n) {
  if (i < 1 || i > n) throw InputError("quaternion matrix index out of range");
  const std::size_t nvars = 4 * n;
  const FinDimAlgebra h = quaternions();
  PolyMatrix u(4, 4, nvars);
  for (std::size_t b = 0; b < 4; ++b) {
    const Matrix l = h.left_mult(h.basis_vector(b));
    const Scalar sign = b == 0 ? Scalar(1) : Scalar(-1);
    const Polynomial v = Polynomial::variable(nvars, 4 * (i - 1) + b, sign);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        if (!l(r, c).is_zero()) u(r, c) += l(r, c) * v;
      }
    }
  }
  return u;
}

GradedQuotient xy_demo() {
  GradedQuotient q;
  q.rank = 1;
  q.nvars = 4;
  q.gen_degrees = {0};
  q.order = ModuleOrder::standard(4, 1);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 2; y < 4; ++y) {
      Monomial m(4);
      m.set(x, 1);
      m.set(y, 1);
      q.relations.push_back(ModVector::from_terms(1, 4, {{m, 0, Scalar(1)}}));
    }
  }
  return q;
}

LieAlgebra abelian_lie(std::size_t dim, FieldSpec field) { return empty_lie(field, dim); }

LieAlgebra nonabelian2(FieldSpec field) {
  LieAlgebra g = empty_lie(field, 2);
  g.c[0][1][1] = field.one();
  g.c[1][0][1] = -field.one();
  return g;
}

LieAlgebra heisenberg(FieldSpec field) {
  LieAlgebra g = empty_lie(field, 3);
  g.c[0][1][2] = field.one();
  g.c[1][0][2] = -field.one();
  return g;
}

// ---------------------------------------------------------------- registry

std::vector<std::string> algebra_names() {
  return {"k",     "m2q",          "m3q",    "quat",   "ut2",      "ut3",
          "dual_numbers", "trunc3", "qplusq", "h_plus_q", "m2_plus_m2"};
}

FinDimAlgebra algebra(const std::string& name) {
  if (name == "k") return ground_field();
  if (name == "m2q") return matrix_algebra(2);
  if (name == "m3q") return matrix_algebra(3);
  if (name == "quat") return quaternions();
  if (name == "ut2") return upper_triangular(2);
  if (name == "ut3") return upper_triangular(3);
  if (name == "dual_numbers") return dual_numbers();
  if (name == "trunc3") return truncated_polynomial(3);
  if (name == "qplusq") return diagonal(2);
  if (name == "h_plus_q") return product(quaternions(), ground_field());
  if (name == "m2_plus_m2") return product(matrix_algebra(2), matrix_algebra(2));
  throw InputError("unknown fixture algebra '" + name + "'");
}

std::vector<std::string> module_names(const std::string& name) {
  if (name == "m2q") return {"regular", "p2"};
  if (name == "m3q") return {"regular", "p3"};
  if (name == "ut2") return {"regular", "standard", "alpha", "gamma"};
  if (name == "ut3") return {"regular", "standard"};
  if (name == "dual_numbers") return {"regular", "simple1"};
  if (name == "qplusq" || name == "h_plus_q" || name == "m2_plus_m2") {
    return {"regular", "simple1", "simple2", "standard"};
  }
  algebra(name);  // validates the name
  return {"regular"};
}

Representation module(const std::string& alg, const std::string& mod) {
  const FinDimAlgebra a = algebra(alg);
  const auto names = module_names(alg);
  if (std::find(names.begin(), names.end(), mod) == names.end()) {
    throw InputError("unknown fixture module '" + mod + "' for algebra '" + alg + "'");
  }
  if (mod == "regular") return regular_module(a);
  if (mod == "p2") return standard_module(a, 2);
  if (mod == "p3") return standard_module(a, 3);
  if (alg == "ut2") {
    if (mod == "standard") return standard_module(a, 2);
    return one_dimensional(a, mod == "alpha" ? 0 : 2);
  }
  if (alg == "ut3") return standard_module(a, 3);
  if (alg == "dual_numbers") return one_dimensional(a, 0);
  if (alg == "qplusq") {
    if (mod == "standard") return direct_sum(one_dimensional(a, 0), one_dimensional(a, 1));
    return one_dimensional(a, mod == "simple1" ? 0 : 1);
  }
  FinDimAlgebra left = alg == "h_plus_q" ? quaternions() : matrix_algebra(2);
  FinDimAlgebra right = alg == "h_plus_q" ? ground_field() : matrix_algebra(2);
  const Representation s1 =
      on_first_factor(left, right, alg == "h_plus_q" ? regular_module(left) : standard_module(left, 2));
  const Representation s2 =
      on_second_factor(left, right, alg == "h_plus_q" ? regular_module(right) : standard_module(right, 2));
  if (mod == "simple1") return s1;
  if (mod == "simple2") return s2;
  return direct_sum(s1, s2);
}

std::vector<NamedModule> all_modules() {
  std::vector<NamedModule> out;
  for (const auto& alg : algebra_names()) {
    for (const auto& mod : module_names(alg)) {
      bool indec = mod != "regular" && mod != "standard";
      if (mod == "regular") {
        indec = alg == "k" || alg == "quat" || alg == "dual_numbers" || alg == "trunc3";
      }
      if (mod == "standard") indec = alg == "ut2" || alg == "ut3";
      out.push_back({alg, mod, indec});
    }
  }
  return out;
}

}  // namespace modfun::fixtures
