#pragma once

#include <string>
#include <vector>

#include "modfun/fdalgebra.hpp"
#include "modfun/fixtures.hpp"
#include "modfun/resolution.hpp"

namespace modfun {

/// Index of x_{ij} (basis element i, copy j; both 0-based) in R = k[x_11..x_dl].
/// Variables are grouped by copy: x_11, ..., x_d1, x_12, ...
inline std::size_t fl_variable(std::size_t i, std::size_t j, std::size_t d) { return j * d + i; }

/// Names x_{i+1}_{j+1} in variable order.
std::vector<std::string> fl_variable_names(std::size_t d, std::size_t l);

/// Id_j = sum_i rho(f_i) x_ij (j is 0-based), an m x m matrix of linear forms.
PolyMatrix generic_element(const FinDimAlgebra& a, const Representation& m, std::size_t j,
                           std::size_t l);

/// Presentation of F_l(M): the cokernel of [Id_1 | ... | Id_l].
struct GradedPresentation {
  std::size_t d = 0;      // number of algebra basis elements per copy
  std::size_t l = 0;
  std::size_t m = 0;      // rank of the free module
  std::size_t nvars = 0;
  PolyMatrix relations;   // m x (l m), linear entries
  std::vector<std::string> var_names;

  /// Term over position, DegLex with x_dl > ... > x_11, e_1 > e_2 > ...
  ModuleOrder default_order() const;
  GradedQuotient quotient() const { return quotient(default_order()); }
  GradedQuotient quotient(const ModuleOrder& order) const;
};

/// Throws InputError when the representation is invalid or l == 0.
GradedPresentation build_presentation(const FinDimAlgebra& a, const Representation& m,
                                      std::size_t l);

/// Substituting the coordinates of 1_A into copy j (zero elsewhere) must give
/// an identity block, and the zero point the zero matrix.
Diagnostics check_specialization(const FinDimAlgebra& a, const GradedPresentation& p);

HomologicalReport invariants(const FinDimAlgebra& a, const Representation& m, std::size_t l,
                             const ResolutionOptions& opts = {});
HomologicalReport invariants(const GradedPresentation& p, const ModuleOrder& order,
                             const ResolutionOptions& opts = {});

/// Degree-0 homomorphisms F_l(M1) -> F_l(M2), as matrices of size m2 x m1.
HomSpace hom0(const FinDimAlgebra& a, const Representation& m1, const Representation& m2,
              std::size_t l);

/// HS(F_l(sub)) + HS(F_l(M/sub)) - HS(F_l(M)); the Hilbert series of the
/// kernel of F_l(sub) -> F_l(M). Throws InvariantViolation if a coefficient
/// comes out negative.
HilbertSeries exactness_defect(const FinDimAlgebra& a, const Representation& m,
                               const std::vector<Vec>& subspace, std::size_t l);

/// Determinant of a square polynomial matrix (expansion over column subsets).
Polynomial determinant(const PolyMatrix& m);

/// det(Id_1) e_k lies in the relation module for every k (l = 1).
bool det_annihilates(const FinDimAlgebra& a, const Representation& m);

/// Antisymmetry and Jacobi identity.
Diagnostics validate_lie(const LieAlgebra& g);

/// Presentation of L~ / [Id, L~] over k[x_1..x_d]: column j is [Id, e_j],
/// with entry (k, j) = sum_i c_ijk x_i. Throws InputError for a non-Lie input.
GradedPresentation lie_bracket_presentation(const LieAlgebra& g);

}  // namespace modfun
