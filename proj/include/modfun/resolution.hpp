#pragma once

#include <map>
#include <utility>
#include <vector>

#include "modfun/hilbert.hpp"
#include "modfun/poly_matrix.hpp"

namespace modfun {

/// F_0 <- F_1 <- ... <- F_k. differentials[i] is d_{i+1} : F_{i+1} -> F_i,
/// a rank(F_i) x rank(F_{i+1}) matrix.
struct FreeComplex {
  std::size_t nvars = 0;
  std::vector<std::vector<int>> degrees;  // generator degrees of each F_i
  std::vector<PolyMatrix> differentials;

  std::size_t length() const { return differentials.size(); }
  std::size_t rank(std::size_t i) const { return i < degrees.size() ? degrees[i].size() : 0; }
};

using BettiTable = std::map<std::pair<int, int>, std::size_t>;  // (h, internal degree) -> rank

/// Options for the resolution engine.
struct ResolutionOptions {
  bool parallel = true;
  bool minimize = true;
};

/// Schreyer resolution of the quotient, minimized by default.
FreeComplex minimal_resolution(const GradedQuotient& q, const ResolutionOptions& opts = {});

/// Minimizes a graded free complex in place by splitting off unit entries.
void minimize(FreeComplex& c);

/// Throws InvariantViolation if some differential has a nonzero constant entry.
BettiTable betti_table(const FreeComplex& c);

/// First position i with d_i d_{i+1} != 0, or -1.
int first_nonzero_composite(const FreeComplex& c, bool parallel = true);

/// ker d_i == im d_{i+1}, checked via Groebner membership (1 <= i <= length).
bool homology_is_zero(const FreeComplex& c, std::size_t position);

struct HomologicalReport {
  BettiTable betti;
  int pd = -1;
  int depth = -1;
  int krull_dim = -1;
  bool is_cm = false;
  std::int64_t cm_type = 0;
  bool cm_type_outside_hypothesis = false;  // reported b_pd although not CM
  HilbertSeries hilbert;
  std::int64_t multiplicity = 0;
};

HomologicalReport homological_report(const GradedQuotient& q, const ResolutionOptions& opts = {});

/// Alternating sum of the component series sum_i (-1)^i sum_j b_ij t^j / (1-t)^n.
HilbertSeries euler_characteristic(const BettiTable& betti, std::size_t nvars);

}  // namespace modfun
