#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modfun/modvec.hpp"

namespace modfun {

/// p(t) / (1-t)^pole_order with p(1) != 0, or the zero series (empty
/// numerator, pole order 0).
struct HilbertSeries {
  std::vector<std::int64_t> numerator;  // coefficient of t^i at index i
  int pole_order = 0;

  bool is_zero() const { return numerator.empty(); }
  /// First `count` coefficients of the power series expansion.
  std::vector<std::int64_t> expand(std::size_t count) const;
  std::string to_string() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Divides out factors (1-t) until p(1) != 0 and trims trailing zeros.
HilbertSeries canonicalize(std::vector<std::int64_t> numerator, int pole_order);

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);
/// Multiplies by t^shift.
HilbertSeries shift(const HilbertSeries& h, int shift);

/// Quotient of a free module by a homogeneous submodule. Generators of the
/// free module have the given degrees; relations must be homogeneous.
struct GradedQuotient {
  std::size_t rank = 0;
  std::size_t nvars = 0;
  std::vector<int> gen_degrees;
  std::vector<ModVector> relations;
  ModuleOrder order;

  /// Throws InputError when a relation is not homogeneous.
  void check_homogeneous() const;
};

HilbertSeries hs_monomial_quotient(std::size_t rank, std::size_t nvars,
                                   const std::vector<int>& gen_degrees,
                                   const std::vector<ModMonomial>& monomial_gens);

HilbertSeries hs_presented(const GradedQuotient& q);
/// Same, reusing an already computed reduced Groebner basis.
HilbertSeries hs_from_gb(const GradedQuotient& q, const Submodule& gb);

struct DimMultiplicity {
  int dimension = -1;
  std::int64_t multiplicity = 0;
};
DimMultiplicity dim_and_multiplicity(const HilbertSeries& h);

HilbertSeries hs_scale_by_regular_element(const HilbertSeries& h, int d);

}  // namespace modfun
