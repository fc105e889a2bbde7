#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modfun/linalg.hpp"
#include "modfun/upoly.hpp"

namespace modfun {

/// Associative algebra with basis f_0..f_{d-1}: f_i f_j = sum_k c[i][j][k] f_k.
struct FinDimAlgebra {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::vector<Vec>> c;  // c[i][j] is the coordinate vector of f_i f_j
  Vec identity;

  Vec mul(const Vec& x, const Vec& y) const;
  /// Matrix of y -> x y (column j is x f_j).
  Matrix left_mult(const Vec& x) const;
  /// Matrix of y -> y x.
  Matrix right_mult(const Vec& x) const;
  Vec basis_vector(std::size_t i) const { return unit_vec(dim, i); }
  Scalar zero() const { return field.zero(); }
};

struct Diagnostics {
  bool ok = true;
  std::string message;
};

Diagnostics validate_algebra(const FinDimAlgebra& a);
/// Two-sided identity solved from the structure constants, if one exists.
std::optional<Vec> find_identity(const FinDimAlgebra& a);

/// Module of dimension `dim`; matrices[i] is rho(f_i).
struct Representation {
  std::size_t dim = 0;
  std::vector<Matrix> matrices;

  Matrix act(const Vec& x) const;  // rho(x)
};

Diagnostics validate_representation(const FinDimAlgebra& a, const Representation& m);
Representation regular_module(const FinDimAlgebra& a);
Representation direct_sum(const Representation& a, const Representation& b);

/// Throws DomainError unless the characteristic is 0 or exceeds dim A.
void require_trace_characteristic(const FinDimAlgebra& a);

std::vector<Vec> radical(const FinDimAlgebra& a);
std::vector<Vec> center(const FinDimAlgebra& a);

/// Minimal polynomial of x over the corner with identity e, computed modulo
/// span(mod) (pass an empty list for the honest minimal polynomial).
UPoly minimal_polynomial(const FinDimAlgebra& a, const Vec& x, const Vec& e,
                         const std::vector<Vec>& mod);

inline constexpr int kPrimitiveRetries = 32;

/// Primitive central orthogonal idempotents summing to 1, sorted by the
/// position of the first nonzero coordinate.
std::vector<Vec> block_decomposition(const FinDimAlgebra& a, std::uint64_t seed = 0x626c6f636bULL);

struct BlockReport {
  Vec idempotent;
  std::size_t dim = 0;                 // dim A_i
  std::size_t radical_dim = 0;         // dim rad A_i
  std::size_t semisimple_dim = 0;      // dim S_i
  std::size_t center_dim = 0;          // dim Z(A_i)
  std::size_t quotient_center_dim = 0; // dim Z(S_i)
  bool quotient_simple = false;
  std::optional<std::int64_t> t;       // sqrt(dim S_i / dim Z(S_i)) when S_i is simple
};

struct AlgebraReport {
  std::vector<Vec> radical_basis;
  std::vector<Vec> center_basis;
  std::vector<BlockReport> blocks;
  bool is_maximally_central = false;
  bool is_equidimensional = false;
  std::optional<std::int64_t> common_t;
  bool azumaya = false;  // separability idempotent exists
};

/// Definition-based verdict plus the separability cross-check; throws
/// InvariantViolation when the two disagree.
AlgebraReport maximally_central_verdict(const FinDimAlgebra& a,
                                        std::uint64_t seed = 0x626c6f636bULL);

/// Existence of e in A (x)_Z A with mu(e) = 1 and x e = e x for all x.
bool has_separability_idempotent(const FinDimAlgebra& a);

struct HomSpace {
  std::size_t dim = 0;
  std::vector<Matrix> basis;  // each m2.dim x m1.dim
};

HomSpace hom_space(const FinDimAlgebra& a, const Representation& m1, const Representation& m2);

/// Restriction to an invariant subspace and the induced quotient.
std::pair<Representation, Representation> sub_quotient_reps(const FinDimAlgebra& a,
                                                             const Representation& m,
                                                             const std::vector<Vec>& subspace);

/// Quotient A / I by a two-sided ideal given by a basis; the quotient basis
/// is the image of the unit vectors not in I, chosen greedily.
FinDimAlgebra quotient_algebra(const FinDimAlgebra& a, const std::vector<Vec>& ideal);

/// A / ann M together with M as a faithful module over it.
std::pair<FinDimAlgebra, Representation> faithful_quotient(const FinDimAlgebra& a,
                                                           const Representation& m);

/// Inverse of a square matrix; throws DomainError when singular.
Matrix inverse(const Matrix& m);

}  // namespace modfun
