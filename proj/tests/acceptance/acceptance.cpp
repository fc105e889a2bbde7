// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "common/oracle.hpp"
#include "modfun/en_complex.hpp"
#include "modfun/errors.hpp"
#include "modfun/fixtures.hpp"
#include "modfun/fl_functor.hpp"
#include "modfun/theorem_bank.hpp"

using namespace modfun;
namespace fx = modfun::fixtures;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string text(const BettiTable& b) {
  std::ostringstream s;
  for (const auto& [k, v] : b) s << "(" << k.first << "," << k.second << "):" << v << " ";
  return s.str();
}

Outcome column_module_closed_forms() {
  Outcome o;
  for (const auto& [n, l] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 2}}) {
    const CrossCheck c = check_theorem3(n, l);
    for (const auto& item : c.items) {
      o.require(item.pass, "(" + std::to_string(n) + "," + std::to_string(l) + ") " + item.name + ": expected " +
                               item.predicted + ", got " + item.computed);
    }
  }
  return o;
}

Outcome quaternions() {
  Outcome o;
  const auto a = fx::quaternions();
  const auto r = invariants(a, regular_module(a), 2);
  const auto cf = closed_forms(2, 2, 8);
  o.require(r.pd == 3, "pd " + std::to_string(r.pd));
  o.require(r.depth == 5, "depth " + std::to_string(r.depth));
  o.require(r.is_cm, "not CM");
  o.require(r.betti == cf.table(2), "betti " + text(r.betti));
  o.require(r.multiplicity == 2 * cf.multiplicity, "multiplicity " + std::to_string(r.multiplicity));
  HilbertSeries twice = cf.hilbert;
  for (auto& c : twice.numerator) c *= 2;
  o.require(r.hilbert == twice, "hilbert " + r.hilbert.to_string());
  o.require(r.cm_type == 2 * cf.cm_type, "type " + std::to_string(r.cm_type));
  return o;
}

Outcome l_one_suite() {
  Outcome o;
  for (const auto& nm : fx::all_modules()) {
    const auto a = fx::algebra(nm.algebra);
    const auto m = fx::module(nm.algebra, nm.module);
    const std::string tag = nm.algebra + "/" + nm.module;
    const auto r = invariants(a, m, 1);
    const BettiTable shape{{{0, 0}, m.dim}, {{1, 1}, m.dim}};
    o.require(r.pd == 1, tag + " pd " + std::to_string(r.pd));
    o.require(r.is_cm, tag + " not CM");
    o.require(r.betti == shape, tag + " betti " + text(r.betti));
    o.require(det_annihilates(a, m), tag + " det does not annihilate");
  }
  return o;
}

Outcome verdicts() {
  Outcome o;
  struct Expect {
    std::string name;
    bool mc;
    bool equi;
    std::vector<std::int64_t> t;
  };
  const std::vector<Expect> expected{
      {"k", true, true, {1}},          {"m2q", true, true, {2}},         {"m3q", true, true, {3}},
      {"quat", true, true, {2}},       {"dual_numbers", true, true, {1}}, {"trunc3", true, true, {1}},
      {"qplusq", true, true, {1, 1}},  {"h_plus_q", true, false, {2, 1}}, {"m2_plus_m2", true, true, {2, 2}},
      {"ut2", false, false, {}},       {"ut3", false, false, {}},
  };
  for (const auto& e : expected) {
    AlgebraReport r;
    try {
      r = maximally_central_verdict(fx::algebra(e.name));
    } catch (const InvariantViolation& ex) {
      o.require(false, e.name + ": verdicts disagree: " + ex.what());
      continue;
    }
    o.require(r.is_maximally_central == e.mc, e.name + " maximally central flag");
    o.require(r.azumaya == r.is_maximally_central, e.name + " separability disagrees");
    o.require(r.is_equidimensional == e.equi, e.name + " equidimensional flag");
    if (e.mc) {
      std::vector<std::int64_t> t;
      for (const auto& b : r.blocks) t.push_back(b.t.value_or(-1));
      o.require(t == e.t, e.name + " block parameters");
    }
  }
  return o;
}

Outcome negative_fixtures() {
  Outcome o;
  const auto a = fx::upper_triangular(2);
  o.require(!invariants(a, regular_module(a), 2).is_cm, "regular module at l=2 is CM");
  const auto ext = fx::module("ut2", "standard");
  o.require(hom_space(a, ext, ext).dim == 1, "standard module decomposes");
  const std::vector<Vec> sub{Vec{a.field.one(), a.field.zero()}};
  const HilbertSeries zero{};
  o.require(exactness_defect(a, ext, sub, 2) != zero, "defect vanishes at l=2");
  o.require(exactness_defect(a, ext, sub, 1) == zero, "defect nonzero at l=1");
  return o;
}

PolyMatrix generic(std::size_t g, std::size_t f) {
  PolyMatrix m(g, f, g * f);
  for (std::size_t r = 0; r < g; ++r) {
    for (std::size_t c = 0; c < f; ++c) m(r, c) = Polynomial::variable(g * f, r * f + c);
  }
  return m;
}

PolyMatrix random_linear(std::size_t g, std::size_t f, std::size_t nvars, const FieldSpec& field,
                         std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-9, 9);
  PolyMatrix m(g, f, nvars);
  for (std::size_t r = 0; r < g; ++r) {
    for (std::size_t c = 0; c < f; ++c) {
      for (std::size_t v = 0; v < nvars; ++v) m(r, c) += Polynomial::variable(nvars, v, field.from_int(coef(rng)));
    }
  }
  return m;
}

Outcome eagon_northcott() {
  Outcome o;
  std::mt19937_64 rng(101);
  for (std::size_t g = 1; g <= 3; ++g) {
    for (std::size_t f = g; f <= 6; ++f) {
      const std::string shape = std::to_string(g) + "x" + std::to_string(f);
      o.require(verify_complex(build_en(generic(g, f))).ok, shape + " generic");
      for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
        for (int rep = 0; rep < 20; ++rep) {
          o.require(verify_complex(build_en(random_linear(g, f, 4, field, rng))).ok, shape + " random");
        }
      }
    }
  }
  for (const auto& [n, l] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}}) {
    const auto c = en_matches_resolution(n, l);
    bool exact = true;
    for (bool z : c.homology_zero) exact = exact && z;
    const std::string shape = std::to_string(n) + "x" + std::to_string(n * l);
    o.require(exact, shape + " homology");
    o.require(c.en == c.resolution, shape + " betti " + text(c.en) + "vs " + text(c.resolution));
  }
  return o;
}

Outcome hilbert_oracle() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  int trials = 0;
  for (; trials < 40; ++trials) {
    const std::size_t n = 1 + rng() % 3;
    const std::size_t rank = 1 + rng() % 3;
    GradedQuotient q;
    q.rank = rank;
    q.nvars = n;
    q.gen_degrees.assign(rank, 0);
    q.order = ModuleOrder::standard(n, rank);
    const std::size_t k = 1 + rng() % 4;
    for (std::size_t r = 0; r < k; ++r) {
      std::vector<Polynomial> comps(rank, Polynomial(n));
      for (auto& c : comps) {
        for (std::size_t v = 0; v < n; ++v) c += Polynomial::variable(n, v, Scalar(static_cast<long>(coef(rng))));
      }
      q.relations.push_back(ModVector::from_components(comps, n));
    }
    o.require(hs_presented(q).expand(6) == oracle::hilbert_coefficients(q, 6),
              "trial " + std::to_string(trials));
  }
  o.require(trials >= 25, "too few trials");
  return o;
}

Outcome faithfulness() {
  Outcome o;
  const std::vector<std::tuple<std::string, std::string, std::string>> pairs{
      {"m2q", "p2", "regular"},          {"m2q", "regular", "p2"},      {"quat", "regular", "regular"},
      {"qplusq", "simple1", "simple2"},  {"qplusq", "standard", "simple1"}, {"h_plus_q", "simple2", "standard"},
      {"dual_numbers", "simple1", "regular"}, {"dual_numbers", "regular", "simple1"},
      {"ut2", "alpha", "gamma"},         {"ut2", "gamma", "standard"},  {"ut2", "standard", "regular"},
      {"ut2", "regular", "regular"},     {"ut3", "standard", "regular"},
  };
  for (const auto& [alg, m1, m2] : pairs) {
    const auto a = fx::algebra(alg);
    const auto r1 = fx::module(alg, m1);
    const auto r2 = fx::module(alg, m2);
    const std::size_t want = hom_space(a, r1, r2).dim;
    for (std::size_t l : {1, 2}) {
      const std::size_t got = hom0(a, r1, r2, l).dim;
      o.require(got == want, alg + " " + m1 + "->" + m2 + " l=" + std::to_string(l) + ": " + std::to_string(got) +
                                 " vs " + std::to_string(want));
    }
  }
  return o;
}

Outcome lie_remark() {
  Outcome o;
  const auto p = lie_bracket_presentation(fx::nonabelian2());
  const auto r = invariants(p, p.default_order());
  o.require(p.nvars == 2, "ring has " + std::to_string(p.nvars) + " variables");
  o.require(r.krull_dim == 2, "Lie Krull dim " + std::to_string(r.krull_dim));
  o.require(r.pd >= 2, "Lie pd " + std::to_string(r.pd));
  const auto xy = homological_report(fx::xy_demo());
  o.require(xy.krull_dim == 2, "xy demo Krull dim " + std::to_string(xy.krull_dim));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closed forms for the column module of M_n", column_module_closed_forms},
      {"quaternions at l=2", quaternions},
      {"l=1 suite over all fixtures", l_one_suite},
      {"maximally central verdicts", verdicts},
      {"upper triangular negative cases", negative_fixtures},
      {"Eagon-Northcott complexes", eagon_northcott},
      {"Hilbert series against brute force", hilbert_oracle},
      {"hom0 against Hom_A", faithfulness},
      {"Lie bracket module and xy demo", lie_remark},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.pass ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
