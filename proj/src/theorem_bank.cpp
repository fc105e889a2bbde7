#include "modfun/theorem_bank.hpp"

#include <cstdlib>
#include <sstream>

#include "modfun/errors.hpp"

namespace modfun {

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw DomainError("closed form value exceeds 64 bits");
  return z.get_si();
}

std::string betti_string(const BettiTable& b) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [key, rank] : b) {
    if (!first) os << ", ";
    first = false;
    os << '(' << key.first << ',' << key.second << "):" << rank;
  }
  os << '}';
  return os.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void add(CrossCheck& cc, std::string name, std::string predicted, std::string computed) {
  const bool pass = predicted == computed;
  cc.items.push_back({std::move(name), std::move(predicted), std::move(computed), pass});
}

CrossCheck run_cross_check(const FinDimAlgebra& a, const Representation& m, int l,
                           const ResolutionOptions& opts) {
  if (l < 1) throw InputError("l must be positive");
  CrossCheck cc;
  cc.computed = invariants(a, m, static_cast<std::size_t>(l), opts);
  const HomologicalReport& r = cc.computed;
  if (m.dim == 0) {
    add(cc, "zero module", "zero", r.hilbert.is_zero() ? "zero" : "nonzero");
    return cc;
  }

  const auto [quotient, faithful] = faithful_quotient(a, m);
  const AlgebraReport qv = maximally_central_verdict(quotient);
  const bool equi = qv.is_maximally_central && qv.is_equidimensional && qv.common_t;

  add(cc, "is_cm", yes_no(l == 1 || equi), yes_no(r.is_cm));
  if (l == 1) {
    add(cc, "pd", "1", std::to_string(r.pd));
    const std::string mm = std::to_string(m.dim);
    add(cc, "resolution shape", "{(0,0):" + mm + ", (1,1):" + mm + "}", betti_string(r.betti));
  } else if (equi) {
    add(cc, "pd", std::to_string((l - 1) * *qv.common_t + 1), std::to_string(r.pd));
  }
  if (!equi) return cc;

  const std::int64_t t = *qv.common_t;
  if (static_cast<std::int64_t>(m.dim) % t != 0) {
    add(cc, "scale dim M / t", "integer", std::to_string(m.dim) + "/" + std::to_string(t));
    return cc;
  }
  const std::int64_t s = static_cast<std::int64_t>(m.dim) / t;
  cc.scale = s;
  const ClosedForms cf = closed_forms(static_cast<int>(t), l, static_cast<int>(a.dim) * l);
  HilbertSeries hs = cf.hilbert;
  for (auto& c : hs.numerator) c *= s;
  add(cc, "betti", betti_string(cf.table(s)), betti_string(r.betti));
  add(cc, "hilbert", hs.to_string(), r.hilbert.to_string());
  add(cc, "multiplicity", std::to_string(s * cf.multiplicity), std::to_string(r.multiplicity));
  add(cc, "cm_type", std::to_string(s * cf.cm_type), std::to_string(r.cm_type));
  add(cc, "krull_dim", std::to_string(cf.dim_r - cf.pd), std::to_string(r.krull_dim));
  return cc;
}

}  // namespace

BettiTable ClosedForms::table(std::int64_t scale) const {
  BettiTable t;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (betti[i] != 0) t[{static_cast<int>(i), degrees[i]}] = static_cast<std::size_t>(scale * betti[i]);
  }
  return t;
}

ClosedForms closed_forms(int n, int l, int dim_r) {
  if (n < 1 || l < 1) throw InputError("closed forms need n, l >= 1");
  if (dim_r < l * n) throw InputError("closed forms need dim R >= l n");
  ClosedForms cf;
  cf.n = n;
  cf.l = l;
  cf.dim_r = dim_r;
  const long ln = static_cast<long>(l) * n;
  cf.pd = (l - 1) * n + 1;
  cf.betti = {n, ln};
  cf.degrees = {0, 1};
  for (int i = 2; i <= cf.pd; ++i) {
    cf.betti.push_back(to_i64(binomial(ln, n + i - 1) * binomial(n + i - 3, n - 1)));
    cf.degrees.push_back(n + i - 1);
  }
  cf.cm_type = to_i64(binomial(ln - 2, n - 1));
  if (l == 1) cf.cm_type = n;  // b_1 = n; the binomial form needs l n >= n + 1
  cf.multiplicity = to_i64(binomial(ln, n - 1));

  // sum_i C(ln, i) (n - i) t^i (1 - t)^(n-1-i), over (1-t)^(dim R - (l-1)n - 1).
  std::vector<mpz_class> num(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const mpz_class c = binomial(ln, i) * (n - i);
    for (int k = 0; k <= n - 1 - i; ++k) {
      mpz_class term = c * binomial(n - 1 - i, k);
      if (k % 2) term = -term;
      num[static_cast<std::size_t>(i + k)] += term;
    }
  }
  std::vector<std::int64_t> coeffs;
  for (const auto& c : num) coeffs.push_back(to_i64(c));
  cf.hilbert = canonicalize(coeffs, dim_r - (l - 1) * n - 1);
  return cf;
}

Prediction predict(const FinDimAlgebra& a, int l) {
  if (l < 1) throw InputError("l must be positive");
  Prediction p;
  p.verdict = maximally_central_verdict(a);
  if (l == 1) {
    p.f_l_exact = true;
    p.all_modules_cm = true;
    p.pd = 1;
    return p;
  }
  p.f_l_exact = p.verdict.is_maximally_central;
  p.all_modules_cm = p.verdict.is_maximally_central;
  if (p.verdict.is_maximally_central && p.verdict.is_equidimensional && p.verdict.common_t) {
    p.pd = (l - 1) * static_cast<int>(*p.verdict.common_t) + 1;
  }
  return p;
}

bool CrossCheck::all_pass() const {
  for (const auto& item : items) {
    if (!item.pass) return false;
  }
  return true;
}

std::size_t guard_vars(std::size_t fallback) {
  const char* env = std::getenv("MODFUN_GUARD_VARS");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0) throw InputError("MODFUN_GUARD_VARS must be a nonnegative integer");
  return static_cast<std::size_t>(v);
}

CrossCheck cross_check(const FinDimAlgebra& a, const Representation& m, int l,
                       const ResolutionOptions& opts) {
  const std::size_t limit = guard_vars(12);
  if (l >= 1 && a.dim * static_cast<std::size_t>(l) > limit) {
    throw GuardError("cross-check needs d l <= " + std::to_string(limit) + " variables, got " +
                     std::to_string(a.dim * static_cast<std::size_t>(l)));
  }
  return run_cross_check(a, m, l, opts);
}

CrossCheck check_theorem3(int n, int l, const ResolutionOptions& opts) {
  if (n < 1 || l < 1) throw InputError("n and l must be positive");
  if (n * l > 6) throw GuardError("check-theorem3 needs l n <= 6");
  const FinDimAlgebra a = fixtures::matrix_algebra(static_cast<std::size_t>(n));
  const Representation p = fixtures::standard_module(a, static_cast<std::size_t>(n));
  CrossCheck cc = run_cross_check(a, p, l, opts);
  const ClosedForms cf = closed_forms(n, l, n * n * l);
  add(cc, "pd (closed form)", std::to_string(cf.pd), std::to_string(cc.computed.pd));
  add(cc, "multiplicity C(ln, n-1)", std::to_string(cf.multiplicity), std::to_string(cc.computed.multiplicity));
  add(cc, "cm_type C(ln-2, n-1)", std::to_string(cf.cm_type), std::to_string(cc.computed.cm_type));
  return cc;
}

}  // namespace modfun
