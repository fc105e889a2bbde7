#pragma once

#include <functional>
#include <string>
#include <vector>

#include "modfun/fdalgebra.hpp"
#include "modfun/hilbert.hpp"
#include "modfun/poly_matrix.hpp"

namespace modfun {

/// Lie algebra with bracket [e_i, e_j] = sum_k c[i][j][k] e_k.
struct LieAlgebra {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::vector<Vec>> c;
};

namespace fixtures {

// Algebras. Bases are listed next to each constructor.

/// The ground field, basis {1}.
FinDimAlgebra ground_field(FieldSpec field = FieldSpec::rationals());
/// M_n(k), basis E_ab at index a*n + b.
FinDimAlgebra matrix_algebra(std::size_t n, FieldSpec field = FieldSpec::rationals());
/// Hamilton quaternions, basis 1, i, j, k.
FinDimAlgebra quaternions(FieldSpec field = FieldSpec::rationals());
/// Upper triangular n x n matrices, basis E_ab (a <= b) in row-major order.
FinDimAlgebra upper_triangular(std::size_t n, FieldSpec field = FieldSpec::rationals());
/// k[x]/(x^k), basis 1, x, ..., x^{k-1}.
FinDimAlgebra truncated_polynomial(std::size_t k, FieldSpec field = FieldSpec::rationals());
/// k[x]/(x^2).
FinDimAlgebra dual_numbers(FieldSpec field = FieldSpec::rationals());
/// k^n with orthogonal idempotent basis.
FinDimAlgebra diagonal(std::size_t n, FieldSpec field = FieldSpec::rationals());
/// A x B with the basis of A followed by the basis of B.
FinDimAlgebra product(const FinDimAlgebra& a, const FinDimAlgebra& b);

// Modules.

/// Column vectors k^n for M_n(k) or the upper triangular algebra.
Representation standard_module(const FinDimAlgebra& a, std::size_t n);
/// k on which f_index acts as 1 and every other basis element as 0; valid
/// for diagonal(n) and for the diagonal matrix units of upper_triangular.
Representation one_dimensional(const FinDimAlgebra& a, std::size_t index);
/// Pulls a module over the summand A (or B) back to product(A, B).
Representation on_first_factor(const FinDimAlgebra& a, const FinDimAlgebra& b,
                               const Representation& m);
Representation on_second_factor(const FinDimAlgebra& a, const FinDimAlgebra& b,
                                const Representation& m);

/// U_i for i in [1, n]: left multiplication by x_i - y_i i - z_i j - t_i k in
/// the basis 1, i, j, k, over k[x_1, y_1, z_1, t_1, ..., t_n].
PolyMatrix quaternion_u(std::size_t i, std::size_t n);

/// k[x1, x2, y1, y2] / (x_i y_j) as a cyclic module.
GradedQuotient xy_demo();

// Lie algebras.

LieAlgebra abelian_lie(std::size_t dim, FieldSpec field = FieldSpec::rationals());
/// [e1, e2] = e2.
LieAlgebra nonabelian2(FieldSpec field = FieldSpec::rationals());
/// [e1, e2] = e3.
LieAlgebra heisenberg(FieldSpec field = FieldSpec::rationals());

/// A named (algebra, module) pair from the registry.
struct NamedModule {
  std::string algebra;
  std::string module;
  bool indecomposable = false;
};

/// Algebra names known to the registry: "k", "m2q", "m3q", "quat", "ut2",
/// "ut3", "dual_numbers", "trunc3", "qplusq", "h_plus_q", "m2_plus_m2".
std::vector<std::string> algebra_names();
FinDimAlgebra algebra(const std::string& name);
/// Module names for an algebra: always "regular"; plus "p2", "p3",
/// "simple1", "simple2", "standard", "alpha", "gamma" where they make sense.
std::vector<std::string> module_names(const std::string& algebra_name);
Representation module(const std::string& algebra_name, const std::string& module_name);
/// Every registered pair, with indecomposability annotations.
std::vector<NamedModule> all_modules();

}  // namespace fixtures
}  // namespace modfun
