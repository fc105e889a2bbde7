#pragma once

#include <string>
#include <vector>

#include "modfun/resolution.hpp"

namespace modfun {

/// Basis element f_J (x) (g_I)^* of F_i. F_0 and F_1 use a one-element
/// subset (the index of g_i or f_j) and an empty multiset. Indices are 0-based.
struct ENBasisElement {
  std::vector<std::size_t> subset;    // strictly increasing
  std::vector<std::size_t> multiset;  // weakly increasing

  std::string label(std::size_t component) const;
  friend bool operator==(const ENBasisElement&, const ENBasisElement&) = default;
};

/// The number 1 Eagon-Northcott (Buchsbaum-Rim) complex of a g x f matrix.
/// complex.differentials[i] is d_{i+1}; degrees follow the linear-entry
/// grading 0, 1, g + i - 1.
struct ENComplex {
  std::size_t g = 0;
  std::size_t f = 0;
  PolyMatrix phi;
  std::vector<std::vector<ENBasisElement>> bases;
  FreeComplex complex;

  std::size_t length() const { return complex.length(); }
};

/// Subsets of {0..n-1} of size k in colexicographic order.
std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t k);
/// Multisets of size k from {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> lex_multisets(std::size_t n, std::size_t k);

/// rank F_i = C(f, g+i-1) C(g+i-3, g-1) for i >= 2.
std::size_t en_rank(std::size_t g, std::size_t f, std::size_t i);

/// Throws InputError when f < g or g == 0.
ENComplex build_en(const PolyMatrix& phi);

struct ComplexCheck {
  bool ok = true;
  int position = -1;  // i with d_i d_{i+1} != 0
  std::size_t row = 0;
  std::size_t col = 0;
};

ComplexCheck verify_complex(const ENComplex& c);

struct ENComparison {
  bool match = false;
  BettiTable en;
  BettiTable resolution;
  std::vector<bool> homology_zero;  // positions 1..k
};

/// Generic n x ln presentation of F_l(P) for M_n(Q): the EN complex against
/// the minimal resolution. Guard n l <= 6.
ENComparison en_matches_resolution(int n, int l);

/// Betti data of a complex read off its degrees (no minimality check).
BettiTable complex_betti(const FreeComplex& c);

}  // namespace modfun
