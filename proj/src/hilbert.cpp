#include "modfun/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "modfun/errors.hpp"

namespace modfun {

namespace {

using IntPoly = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("Hilbert numerator overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("Hilbert numerator overflow");
  return r;
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly add(const IntPoly& a, const IntPoly& b, std::int64_t sign = 1) {
  IntPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = checked_add(out[i], checked_mul(sign, b[i]));
  trim(out);
  return out;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    }
  }
  trim(out);
  return out;
}

IntPoly one_minus_t_pow(int k) {
  IntPoly out{1};
  for (int i = 0; i < k; ++i) out = mul(out, {1, -1});
  return out;
}

IntPoly shifted(const IntPoly& p, int s) {
  if (p.empty()) return {};
  IntPoly out(p.size() + static_cast<std::size_t>(s), 0);
  std::copy(p.begin(), p.end(), out.begin() + s);
  return out;
}

std::int64_t at_one(const IntPoly& p) {
  std::int64_t s = 0;
  for (auto c : p) s = checked_add(s, c);
  return s;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) {
      return h.divides(g);
    });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

// Numerator N with HS(R/I) = N / (1-t)^n.
IntPoly numerator(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().degree() == 0) return {};
  if (gens.back().degree() == 1) return one_minus_t_pow(static_cast<int>(gens.size()));
  // Pivot on the most frequent variable among the nonlinear generators.
  std::vector<std::size_t> freq(nvars, 0);
  for (const auto& g : gens) {
    if (g.degree() < 2) continue;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (g[v] > 0) ++freq[v];
    }
  }
  const auto pivot = static_cast<std::size_t>(
      std::max_element(freq.begin(), freq.end()) - freq.begin());
  const Monomial x = Monomial::variable(nvars, pivot);

  std::vector<Monomial> plus = gens;
  plus.push_back(x);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(x.divides(g) ? g / x : g);
  return add(numerator(std::move(plus), nvars), shifted(numerator(std::move(colon), nvars), 1));
}

}  // namespace

std::vector<std::int64_t> HilbertSeries::expand(std::size_t count) const {
  // Multiply by 1/(1-t) pole_order times: prefix sums.
  std::vector<std::int64_t> c(count, 0);
  for (std::size_t i = 0; i < std::min(count, numerator.size()); ++i) c[i] = numerator[i];
  for (int k = 0; k < pole_order; ++k) {
    for (std::size_t i = 1; i < count; ++i) c[i] = checked_add(c[i], c[i - 1]);
  }
  return c;
}

std::string HilbertSeries::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    const auto c = numerator[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const auto a = c < 0 ? -c : c;
    if (i == 0 || a != 1) os << a;
    if (i > 0) os << 't';
    if (i > 1) os << '^' << i;
  }
  os << ")/(1-t)^" << pole_order;
  return os.str();
}

HilbertSeries canonicalize(std::vector<std::int64_t> p, int pole_order) {
  trim(p);
  if (p.empty()) return {};
  while (pole_order > 0 && at_one(p) == 0) {
    // Synthetic division by (1 - t): q_i = sum_{k<=i} p_k.
    IntPoly q(p.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      acc = checked_add(acc, p[i]);
      q[i] = acc;
    }
    p = std::move(q);
    trim(p);
    --pole_order;
  }
  while (pole_order < 0) {
    p = mul(p, {1, -1});
    ++pole_order;
  }
  return {std::move(p), pole_order};
}

namespace {
IntPoly lift(const HilbertSeries& h, int pole) {
  return mul(h.numerator, one_minus_t_pow(pole - h.pole_order));
}
}  // namespace

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  const int pole = std::max(a.pole_order, b.pole_order);
  return canonicalize(add(lift(a, pole), lift(b, pole)), pole);
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
  const int pole = std::max(a.pole_order, b.pole_order);
  return canonicalize(add(lift(a, pole), lift(b, pole), -1), pole);
}

HilbertSeries shift(const HilbertSeries& h, int s) {
  if (s < 0) throw DomainError("negative degree shift");
  return {shifted(h.numerator, s), h.pole_order};
}

void GradedQuotient::check_homogeneous() const {
  if (gen_degrees.size() != rank) throw InputError("one degree per generator is required");
  for (int d : gen_degrees) {
    if (d < 0) throw InputError("generator degrees must be nonnegative");
  }
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (relations[i].rank() != rank) throw InputError("relation has the wrong rank");
    if (!relations[i].is_homogeneous(gen_degrees)) {
      throw InputError("relation " + std::to_string(i) + " is not homogeneous");
    }
  }
}

HilbertSeries hs_monomial_quotient(std::size_t rank, std::size_t nvars,
                                   const std::vector<int>& gen_degrees,
                                   const std::vector<ModMonomial>& monomial_gens) {
  if (gen_degrees.size() != rank) throw InputError("one degree per generator is required");
  std::vector<std::vector<Monomial>> per_slot(rank);
  for (const auto& m : monomial_gens) {
    if (m.comp >= rank) throw InputError("monomial outside the free module");
    per_slot[m.comp].push_back(m.mono);
  }
  IntPoly total;
  for (std::size_t s = 0; s < rank; ++s) {
    if (gen_degrees[s] < 0) throw InputError("generator degrees must be nonnegative");
    total = add(total, shifted(numerator(per_slot[s], nvars), gen_degrees[s]));
  }
  return canonicalize(std::move(total), static_cast<int>(nvars));
}

HilbertSeries hs_from_gb(const GradedQuotient& q, const Submodule& gb) {
  return hs_monomial_quotient(q.rank, q.nvars, q.gen_degrees, initial_module(gb));
}

HilbertSeries hs_presented(const GradedQuotient& q) {
  q.check_homogeneous();
  if (q.rank == 0) return {};
  const Submodule gb = buchberger(q.relations, q.order, q.rank, q.nvars);
  return hs_from_gb(q, gb);
}

DimMultiplicity dim_and_multiplicity(const HilbertSeries& h) {
  if (h.is_zero()) return {};
  return {h.pole_order, at_one(h.numerator)};
}

HilbertSeries hs_scale_by_regular_element(const HilbertSeries& h, int d) {
  if (d < 1) throw DomainError("regular element degree must be positive");
  IntPoly f(static_cast<std::size_t>(d) + 1, 0);
  f[0] = 1;
  f[static_cast<std::size_t>(d)] = -1;
  return canonicalize(mul(h.numerator, f), h.pole_order);
}

}  // namespace modfun
