#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "modfun/fl_functor.hpp"

namespace modfun {

/// Exact binomial coefficient; zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);

/// The invariants of F_l(P) for a simple module P over M_n.
struct ClosedForms {
  int n = 0;
  int l = 0;
  int dim_r = 0;
  std::vector<std::int64_t> betti;  // b_0 .. b_pd
  std::vector<int> degrees;         // concentration degree of each b_i
  std::int64_t cm_type = 0;
  HilbertSeries hilbert;
  std::int64_t multiplicity = 0;
  int pd = 0;

  BettiTable table(std::int64_t scale = 1) const;
};

/// Throws InputError unless n, l >= 1 and dim_r >= l n.
ClosedForms closed_forms(int n, int l, int dim_r);

struct Prediction {
  bool f_l_exact = false;
  bool all_modules_cm = false;  // for indecomposable modules
  std::optional<int> pd;        // (l-1) t + 1 when equidimensional
  AlgebraReport verdict;
};

Prediction predict(const FinDimAlgebra& a, int l);

struct CheckItem {
  std::string name;
  std::string predicted;
  std::string computed;
  bool pass = false;
};

struct CrossCheck {
  std::vector<CheckItem> items;
  HomologicalReport computed;
  std::optional<std::int64_t> scale;  // dim M / t when closed forms apply
  bool all_pass() const;
};

/// Variable budget: the value of MODFUN_GUARD_VARS if set, else `fallback`.
std::size_t guard_vars(std::size_t fallback);

/// Compares the engine against the predictions for (A, M, l). CM-ness is
/// predicted through A / ann M (l > 1) and the closed forms are applied when
/// that quotient is equidimensional maximally central. Throws GuardError when
/// d l exceeds guard_vars(12).
CrossCheck cross_check(const FinDimAlgebra& a, const Representation& m, int l,
                       const ResolutionOptions& opts = {});

/// Closed forms against F_l(P) for M_n(Q) and its column module, itemized.
CrossCheck check_theorem3(int n, int l, const ResolutionOptions& opts = {});

}  // namespace modfun
