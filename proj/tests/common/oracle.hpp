#pragma once

// Brute-force graded linear algebra, independent of the Groebner engine.

#include <map>
#include <vector>

#include "modfun/hilbert.hpp"
#include "modfun/linalg.hpp"

namespace oracle {

using namespace modfun;

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int deg) {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  std::vector<unsigned> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (nvars == 0) {
      if (left == 0) out.push_back(Monomial(0));
      return;
    }
    if (i + 1 == nvars) {
      e[i] = static_cast<unsigned>(left);
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = static_cast<unsigned>(k);
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, deg);
  return out;
}

/// Basis of the degree-`deg` piece of the free module: (slot, monomial).
inline std::vector<ModMonomial> free_basis(const GradedQuotient& q, int deg) {
  std::vector<ModMonomial> out;
  for (std::size_t s = 0; s < q.rank; ++s) {
    for (auto& m : monomials_of_degree(q.nvars, deg - q.gen_degrees[s])) {
      out.push_back({m, static_cast<std::uint32_t>(s)});
    }
  }
  return out;
}

/// Coordinates of the degree-`deg` piece of the submodule, spanned by m * r.
inline std::vector<Vec> submodule_piece(const GradedQuotient& q, int deg,
                                        const std::vector<ModMonomial>& basis) {
  std::map<std::pair<std::uint32_t, std::vector<unsigned>>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    index[{basis[i].comp, basis[i].mono.exponents()}] = i;
  }
  std::vector<Vec> rows;
  for (const auto& r : q.relations) {
    if (r.is_zero()) continue;
    const int rd = r.degree(q.gen_degrees);
    for (const auto& m : monomials_of_degree(q.nvars, deg - rd)) {
      Vec v(basis.size());
      for (const auto& t : r.terms()) {
        v[index.at({t.comp, (t.mono * m).exponents()})] += t.coef;
      }
      rows.push_back(std::move(v));
    }
  }
  return rows;
}

inline std::vector<std::int64_t> hilbert_coefficients(const GradedQuotient& q, int count) {
  std::vector<std::int64_t> out;
  for (int d = 0; d < count; ++d) {
    const auto basis = free_basis(q, d);
    const auto rows = submodule_piece(q, d, basis);
    const std::size_t r =
        rows.empty() ? 0 : modfun::rank(Matrix::from_rows(rows, basis.size()));
    out.push_back(static_cast<std::int64_t>(basis.size() - r));
  }
  return out;
}

/// Membership of a homogeneous vector by solving for coefficients in its degree.
inline bool contains(const GradedQuotient& q, const ModVector& v) {
  if (v.is_zero()) return true;
  const int d = v.degree(q.gen_degrees);
  const auto basis = free_basis(q, d);
  auto rows = submodule_piece(q, d, basis);
  std::map<std::pair<std::uint32_t, std::vector<unsigned>>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[{basis[i].comp, basis[i].mono.exponents()}] = i;
  Vec target(basis.size());
  for (const auto& t : v.terms()) target[index.at({t.comp, t.mono.exponents()})] = t.coef;
  return in_span(rows, target);
}

}  // namespace oracle
