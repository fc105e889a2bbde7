#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "modfun/poly.hpp"

namespace modfun {

/// A term c * m * e_comp of a free module.
struct ModTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  Scalar coef;
};

/// A module monomial m * e_comp.
struct ModMonomial {
  Monomial mono;
  std::uint32_t comp = 0;
  friend bool operator==(const ModMonomial&, const ModMonomial&) = default;
};

/// Element of R^rank. Terms are sorted canonically (term over position on
/// the storage order, smaller basis index first) with no zero coefficients.
class ModVector {
 public:
  ModVector() = default;
  ModVector(std::size_t rank, std::size_t nvars) : rank_(rank), nvars_(nvars) {}

  static ModVector from_terms(std::size_t rank, std::size_t nvars, std::vector<ModTerm> terms);
  static ModVector unit(std::size_t rank, std::size_t nvars, std::uint32_t comp);
  static ModVector from_components(const std::vector<Polynomial>& comps, std::size_t nvars);

  std::size_t rank() const { return rank_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<ModTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Polynomial component(std::uint32_t i) const;
  std::vector<Polynomial> components() const;
  /// Homogeneous w.r.t. deg(m e_i) = deg m + gen_degrees[i].
  bool is_homogeneous(const std::vector<int>& gen_degrees) const;
  /// Degree of the first term under the same grading (vector must be nonzero).
  int degree(const std::vector<int>& gen_degrees) const;

  ModVector operator-() const;
  ModVector& operator+=(const ModVector& rhs);
  ModVector& operator-=(const ModVector& rhs);
  friend ModVector operator+(ModVector a, const ModVector& b) { return a += b; }
  friend ModVector operator-(ModVector a, const ModVector& b) { return a -= b; }
  friend ModVector operator*(const Scalar& c, const ModVector& v);
  friend ModVector operator*(const Polynomial& p, const ModVector& v);
  ModVector mul_term(const Monomial& m, const Scalar& c) const;

  friend bool operator==(const ModVector& a, const ModVector& b);

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::size_t rank_ = 0;
  std::size_t nvars_ = 0;
  std::vector<ModTerm> terms_;
};

struct SchreyerFrame;

/// Monomial order on a free module: term-over-position or
/// position-over-term over a ring order, or the order induced by a list of
/// leading terms (Schreyer order, used internally for resolutions).
class ModuleOrder {
 public:
  enum class Style { TermOverPosition, PositionOverTerm };

  ModuleOrder() = default;
  /// basis_priority[0] is the greatest basis index.
  ModuleOrder(RingOrder ring, Style style, std::vector<std::uint32_t> basis_priority);

  static ModuleOrder top(RingOrder ring, std::size_t rank);
  static ModuleOrder pot(RingOrder ring, std::size_t rank);
  /// Default: term over position, DegLex, e_1 > e_2 > ...
  static ModuleOrder standard(std::size_t nvars, std::size_t rank);

  /// Induced order on R^t from leading terms lead[a] of elements of a module
  /// ordered by `base`: m e_a > n e_b iff m*lead[a] > n*lead[b], ties broken
  /// by a < b.
  static ModuleOrder schreyer(const ModuleOrder& base, const std::vector<ModMonomial>& leads);

  const RingOrder& ring_order() const { return ring_; }
  Style style() const { return style_; }
  const std::vector<std::uint32_t>& basis_priority() const { return priority_; }
  bool is_schreyer() const { return frame_ != nullptr; }
  std::size_t rank() const;

  std::strong_ordering compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                               std::uint32_t cb) const;
  std::strong_ordering compare(const ModTerm& a, const ModTerm& b) const {
    return compare(a.mono, a.comp, b.mono, b.comp);
  }

 private:
  std::strong_ordering compare_base(const Monomial& a, std::uint32_t ca, const Monomial& b,
                                    std::uint32_t cb) const;

  RingOrder ring_;
  Style style_ = Style::TermOverPosition;
  std::vector<std::uint32_t> priority_;
  std::vector<std::uint32_t> rank_of_;  // inverse of priority_
  std::shared_ptr<const SchreyerFrame> frame_;
};

/// Leading term of a nonzero vector; throws DomainError on zero.
ModTerm leading_term(const ModVector& v, const ModuleOrder& order);

/// Submodule of R^rank given by generators; reduced_gb is filled by buchberger.
struct Submodule {
  std::size_t rank = 0;
  std::size_t nvars = 0;
  ModuleOrder order;
  std::vector<ModVector> generators;
  std::optional<std::vector<ModVector>> reduced_gb;
};

/// g - a (n/m) f where n is the greatest monomial of g divisible by
/// m = in(f) in the same basis slot, a its coefficient, f made monic.
/// nullopt when no monomial of g is reducible by f.
std::optional<ModVector> reduce_once(const ModVector& g, const ModVector& f,
                                     const ModuleOrder& order);

/// Full reduction: repeatedly reduce the greatest reducible monomial by the
/// first eligible basis element in list order.
ModVector normal_form(const ModVector& g, const std::vector<ModVector>& basis,
                      const ModuleOrder& order);

/// (m/m1) f - (m/m2) g for monic f, g with m the lcm of their leading
/// monomials; nullopt when the leading terms lie in different slots.
std::optional<ModVector> s_vector(const ModVector& f, const ModVector& g, const ModuleOrder& order);

/// Reduced Groebner basis of the submodule generated by gens. The result is
/// monic, auto-reduced and sorted descending by leading term.
Submodule buchberger(const std::vector<ModVector>& gens, const ModuleOrder& order);
Submodule buchberger(const std::vector<ModVector>& gens, const ModuleOrder& order,
                     std::size_t rank, std::size_t nvars);

std::vector<ModMonomial> initial_module(const Submodule& sub);
bool contains(const ModVector& v, const Submodule& sub);

/// Generators of the syzygies of the reduced Groebner basis of sub, as
/// vectors in R^t (t = basis size). One syzygy per S-pair whose lcm quotient
/// is minimal among the pairs led by the same element; by Schreyer's theorem
/// these generate (indeed form a Groebner basis of) the syzygy module.
std::vector<ModVector> schreyer_syzygies(const Submodule& sub);

/// Generators of the syzygy module of an arbitrary list of vectors in
/// R^rank, computed by elimination on the graph module (v_i, e_i).
std::vector<ModVector> syzygies_of(const std::vector<ModVector>& gens, std::size_t rank,
                                   std::size_t nvars);

namespace detail {

/// Terms sorted descending by a fixed module order.
using OrderedVec = std::vector<ModTerm>;

OrderedVec to_ordered(const ModVector& v, const ModuleOrder& order);
ModVector from_ordered(std::size_t rank, std::size_t nvars, const OrderedVec& v);
void make_monic(OrderedVec& v);
/// g -= a * n * f, all sorted by order.
void sub_mul(OrderedVec& g, const Scalar& a, const Monomial& n, const OrderedVec& f,
             const ModuleOrder& order);

/// Syzygy frame of a Groebner basis `gb` (each sorted by `order`, monic).
/// Returns the syzygies as vectors of R^{gb.size()} sorted by `next` (which
/// must be ModuleOrder::schreyer(order, leads of gb)).
std::vector<OrderedVec> syzygy_frame(const std::vector<OrderedVec>& gb, const ModuleOrder& order,
                                     const ModuleOrder& next, bool parallel = true);

}  // namespace detail

}  // namespace modfun
