#include "modfun/resolution.hpp"

#include <algorithm>
#include <numeric>

#include "modfun/errors.hpp"
#include "modfun/kernels.hpp"

namespace modfun {

using detail::OrderedVec;

namespace {

// Columns as a matrix F_k^rows.
PolyMatrix to_matrix(const std::vector<OrderedVec>& elems, std::size_t rows, std::size_t nvars) {
  PolyMatrix m(rows, elems.size(), nvars);
  for (std::size_t c = 0; c < elems.size(); ++c) {
    std::vector<std::vector<Term>> parts(rows);
    for (const auto& t : elems[c]) parts[t.comp].push_back({t.mono, t.coef});
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = Polynomial::from_terms(nvars, std::move(parts[r]));
  }
  return m;
}

}  // namespace

FreeComplex minimal_resolution(const GradedQuotient& q, const ResolutionOptions& opts) {
  q.check_homogeneous();
  FreeComplex c;
  c.nvars = q.nvars;
  c.degrees.push_back(q.gen_degrees);
  if (q.rank == 0) return c;

  const Submodule sub = buchberger(q.relations, q.order, q.rank, q.nvars);
  ModuleOrder order = q.order;
  std::vector<OrderedVec> elems;
  for (const auto& g : *sub.reduced_gb) elems.push_back(detail::to_ordered(g, order));
  std::size_t rows = q.rank;

  for (std::size_t level = 0; !elems.empty(); ++level) {
    if (level > q.nvars) {
      throw InvariantViolation("resolution longer than the number of variables plus one");
    }
    // Sorting by decreasing exponent of one variable per level keeps that
    // variable out of the next leading terms, so the frame stops in time.
    if (q.nvars > 0) {
      const std::size_t v = level % q.nvars;
      std::stable_sort(elems.begin(), elems.end(), [&](const OrderedVec& a, const OrderedVec& b) {
        const auto& la = a.front();
        const auto& lb = b.front();
        if (la.comp != lb.comp) return la.comp < lb.comp;
        return la.mono[v] > lb.mono[v];
      });
    }
    const auto& prev_degrees = c.degrees.back();
    std::vector<int> degs;
    std::vector<ModMonomial> leads;
    for (const auto& e : elems) {
      degs.push_back(static_cast<int>(e.front().mono.degree()) + prev_degrees[e.front().comp]);
      leads.push_back({e.front().mono, e.front().comp});
    }
    c.differentials.push_back(to_matrix(elems, rows, q.nvars));
    c.degrees.push_back(std::move(degs));

    const ModuleOrder next = ModuleOrder::schreyer(order, leads);
    std::vector<OrderedVec> syz = detail::syzygy_frame(elems, order, next, opts.parallel);
    rows = elems.size();
    elems = std::move(syz);
    order = next;
  }
  if (opts.minimize) minimize(c);
  return c;
}

void minimize(FreeComplex& c) {
  for (std::size_t i = 0; i < c.differentials.size(); ++i) {
    for (;;) {
      PolyMatrix& d = c.differentials[i];
      std::size_t pr = d.rows();
      std::size_t pc = d.cols();
      for (std::size_t r = 0; r < d.rows() && pr == d.rows(); ++r) {
        for (std::size_t col = 0; col < d.cols(); ++col) {
          const Polynomial& p = d(r, col);
          if (!p.is_zero() && !p.constant_term().is_zero()) {
            if (!p.is_constant()) {
              throw InvariantViolation("inhomogeneous differential entry during minimization");
            }
            pr = r;
            pc = col;
            break;
          }
        }
      }
      if (pr == d.rows()) break;
      const Scalar inv = d(pr, pc).constant_term().inverse();
      const std::vector<Polynomial> colv = [&] {
        std::vector<Polynomial> v(d.rows());
        for (std::size_t r = 0; r < d.rows(); ++r) v[r] = d(r, pc);
        return v;
      }();
      std::vector<Polynomial> rowv(d.cols());
      for (std::size_t k = 0; k < d.cols(); ++k) rowv[k] = inv * d(pr, k);
      for (std::size_t r = 0; r < d.rows(); ++r) {
        if (r == pr || colv[r].is_zero()) continue;
        for (std::size_t k = 0; k < d.cols(); ++k) {
          if (k == pc || rowv[k].is_zero()) continue;
          d(r, k) -= colv[r] * rowv[k];
        }
      }
      d.remove_row(pr);
      d.remove_col(pc);
      c.degrees[i].erase(c.degrees[i].begin() + static_cast<std::ptrdiff_t>(pr));
      c.degrees[i + 1].erase(c.degrees[i + 1].begin() + static_cast<std::ptrdiff_t>(pc));
      if (i > 0) c.differentials[i - 1].remove_col(pr);
      if (i + 1 < c.differentials.size()) c.differentials[i + 1].remove_row(pc);
    }
  }
  while (!c.differentials.empty() && c.degrees.back().empty()) {
    c.differentials.pop_back();
    c.degrees.pop_back();
  }
}

BettiTable betti_table(const FreeComplex& c) {
  BettiTable b;
  for (const auto& d : c.differentials) {
    for (std::size_t r = 0; r < d.rows(); ++r) {
      for (std::size_t k = 0; k < d.cols(); ++k) {
        if (!d(r, k).is_zero() && !d(r, k).constant_term().is_zero()) {
          throw InvariantViolation("complex is not minimal: constant differential entry");
        }
      }
    }
  }
  for (std::size_t i = 0; i < c.degrees.size(); ++i) {
    for (int deg : c.degrees[i]) ++b[{static_cast<int>(i), deg}];
  }
  return b;
}

int first_nonzero_composite(const FreeComplex& c, bool parallel) {
  for (std::size_t i = 0; i + 1 < c.differentials.size(); ++i) {
    const auto& a = c.differentials[i];
    const auto& b = c.differentials[i + 1];
    const PolyMatrix prod = parallel ? matmul(a, b) : matmul_serial(a, b);
    if (!prod.is_zero()) return static_cast<int>(i + 1);
  }
  return -1;
}

bool homology_is_zero(const FreeComplex& c, std::size_t position) {
  if (position < 1 || position > c.length()) throw InputError("homology position out of range");
  const PolyMatrix& d = c.differentials[position - 1];
  const std::size_t rank = d.cols();
  if (rank == 0) return true;
  const auto kernel = syzygies_of(d.columns(), d.rows(), c.nvars);
  if (kernel.empty()) return true;
  std::vector<ModVector> image;
  if (position < c.length()) image = c.differentials[position].columns();
  const Submodule im =
      buchberger(image, ModuleOrder::standard(c.nvars, rank), rank, c.nvars);
  return std::all_of(kernel.begin(), kernel.end(),
                     [&](const ModVector& v) { return contains(v, im); });
}

HilbertSeries euler_characteristic(const BettiTable& betti, std::size_t nvars) {
  std::vector<std::int64_t> num;
  for (const auto& [key, count] : betti) {
    const auto [h, deg] = key;
    if (deg < 0) throw DomainError("negative internal degree");
    if (num.size() <= static_cast<std::size_t>(deg)) num.resize(static_cast<std::size_t>(deg) + 1, 0);
    const auto v = static_cast<std::int64_t>(count);
    num[static_cast<std::size_t>(deg)] += (h % 2 == 0) ? v : -v;
  }
  return canonicalize(std::move(num), static_cast<int>(nvars));
}

HomologicalReport homological_report(const GradedQuotient& q, const ResolutionOptions& opts) {
  HomologicalReport rep;
  rep.hilbert = hs_presented(q);
  const auto dm = dim_and_multiplicity(rep.hilbert);
  rep.krull_dim = dm.dimension;
  rep.multiplicity = dm.multiplicity;

  const FreeComplex c = minimal_resolution(q, opts);
  rep.betti = betti_table(c);
  if (!(euler_characteristic(rep.betti, q.nvars) == rep.hilbert)) {
    throw InvariantViolation("Euler characteristic of the resolution differs from the Hilbert series");
  }
  if (rep.hilbert.is_zero()) return rep;  // zero module conventions

  rep.pd = static_cast<int>(c.length());
  rep.depth = static_cast<int>(q.nvars) - rep.pd;
  rep.is_cm = rep.depth == rep.krull_dim;
  rep.cm_type = static_cast<std::int64_t>(c.rank(c.length()));
  rep.cm_type_outside_hypothesis = !rep.is_cm;
  return rep;
}

}  // namespace modfun
