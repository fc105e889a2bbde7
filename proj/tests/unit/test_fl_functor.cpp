#include "doctest.h"

#include "modfun/errors.hpp"
#include "modfun/fl_functor.hpp"

using namespace modfun;
namespace fx = modfun::fixtures;

namespace {

std::vector<std::size_t> betti_ranks(const BettiTable& b) {
  std::vector<std::size_t> out;
  for (const auto& [key, rank] : b) {
    if (out.size() <= static_cast<std::size_t>(key.first)) out.resize(key.first + 1, 0);
    out[key.first] += rank;
  }
  return out;
}

}  // namespace

TEST_CASE("presentations of the named examples") {
  const auto k = fx::ground_field();
  const auto p = build_presentation(k, regular_module(k), 2);
  CHECK(p.relations.rows() == 1);
  CHECK(p.relations.cols() == 2);
  CHECK(p.relations(0, 0) == Polynomial::variable(2, 0));
  CHECK(p.relations(0, 1) == Polynomial::variable(2, 1));

  const auto m2 = fx::matrix_algebra(2);
  const auto g = build_presentation(m2, fx::standard_module(m2, 2), 1);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) CHECK(g.relations(r, c) == Polynomial::variable(4, r * 2 + c));
  }

  // The quaternion matrix U_1 agrees with Id_1 after y, z, t -> -y, -z, -t.
  const auto h = fx::quaternions();
  const auto q = build_presentation(h, regular_module(h), 1);
  std::vector<Polynomial> flip;
  for (std::size_t i = 0; i < 4; ++i) flip.push_back(Polynomial::variable(4, i, i == 0 ? Scalar(1) : Scalar(-1)));
  const PolyMatrix u = fx::quaternion_u(1, 1);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) CHECK(q.relations(r, c).substitute(flip) == u(r, c));
  }
  CHECK(p.var_names == std::vector<std::string>{"x1_1", "x1_2"});
}

TEST_CASE("specialization at the identity and zero points") {
  for (const auto& nm : fx::all_modules()) {
    const auto a = fx::algebra(nm.algebra);
    if (a.dim * 2 > 16) continue;
    const auto p = build_presentation(a, fx::module(nm.algebra, nm.module), 2);
    CHECK_MESSAGE(check_specialization(a, p).ok, (nm.algebra + "/" + nm.module));
  }
}

TEST_CASE("invariants: M_2 standard module, l = 2") {
  const auto m2 = fx::matrix_algebra(2);
  const auto r = invariants(m2, fx::standard_module(m2, 2), 2);
  CHECK(r.pd == 3);
  CHECK(r.krull_dim == 5);
  CHECK(r.is_cm);
  CHECK(r.betti == BettiTable{{{0, 0}, 2}, {{1, 1}, 4}, {{2, 3}, 4}, {{3, 4}, 2}});
  CHECK(r.hilbert == HilbertSeries{{2, 2}, 5});
  CHECK(r.multiplicity == 4);
  CHECK(r.cm_type == 2);
}

TEST_CASE("invariants: quaternions, l = 2") {
  const auto h = fx::quaternions();
  const auto r = invariants(h, regular_module(h), 2);
  CHECK(r.pd == 3);
  CHECK(r.depth == 5);
  CHECK(r.is_cm);
  CHECK(betti_ranks(r.betti) == std::vector<std::size_t>{4, 8, 8, 4});
  CHECK(r.multiplicity == 8);
}

TEST_CASE("invariants: non maximally central and split examples") {
  const auto ut2 = fx::upper_triangular(2);
  CHECK_FALSE(invariants(ut2, regular_module(ut2), 2).is_cm);

  const auto qq = fx::diagonal(2);
  const auto r = invariants(qq, fx::module("qplusq", "standard"), 2);
  CHECK(r.is_cm);
  CHECK(r.krull_dim == 2);
  CHECK(r.hilbert == HilbertSeries{{2}, 2});
}

TEST_CASE("hom0 equals Hom_A") {
  const auto m2 = fx::matrix_algebra(2);
  const auto p = fx::standard_module(m2, 2);
  CHECK(hom0(m2, p, p, 1).dim == 1);
  const auto qq = fx::diagonal(2);
  CHECK(hom0(qq, fx::one_dimensional(qq, 0), fx::one_dimensional(qq, 1), 2).dim == 0);
  const auto dual = fx::dual_numbers();
  CHECK(hom0(dual, regular_module(dual), regular_module(dual), 1).dim == 2);

  const auto ut2 = fx::upper_triangular(2);
  const std::vector<std::string> mods = {"standard", "alpha", "gamma", "regular"};
  for (const auto& x : mods) {
    for (const auto& y : mods) {
      const auto mx = fx::module("ut2", x), my = fx::module("ut2", y);
      CHECK_MESSAGE(hom0(ut2, mx, my, 2).dim == hom_space(ut2, mx, my).dim, (x + " -> " + y));
    }
  }
}

TEST_CASE("exactness defect") {
  const auto ut2 = fx::upper_triangular(2);
  const auto std2 = fx::standard_module(ut2, 2);
  const std::vector<Vec> sub = {Vec{Scalar(1), Scalar(0)}};
  CHECK(exactness_defect(ut2, std2, sub, 1).is_zero());
  CHECK_FALSE(exactness_defect(ut2, std2, sub, 2).is_zero());

  const auto qq = fx::diagonal(2);
  const auto split = fx::module("qplusq", "standard");
  CHECK(exactness_defect(qq, split, {Vec{Scalar(1), Scalar(0)}}, 2).is_zero());
  const auto m2 = fx::matrix_algebra(2);
  CHECK(exactness_defect(m2, direct_sum(fx::standard_module(m2, 2), fx::standard_module(m2, 2)),
                         {unit_vec(4, 0), unit_vec(4, 1)}, 1)
            .is_zero());
}

TEST_CASE("determinant and annihilation") {
  PolyMatrix m(2, 2, 4);
  for (std::size_t i = 0; i < 4; ++i) m(i / 2, i % 2) = Polynomial::variable(4, i);
  const auto det = determinant(m);
  CHECK(det == Polynomial::variable(4, 0) * Polynomial::variable(4, 3) -
                   Polynomial::variable(4, 1) * Polynomial::variable(4, 2));
  PolyMatrix three = PolyMatrix::from_scalars(Matrix::from_rows({{1, 2, 0}, {0, 1, 3}, {4, 0, 1}}, 3), 1);
  CHECK(determinant(three) == Polynomial::constant(1, Scalar(25)));

  const auto k = fx::ground_field();
  CHECK(det_annihilates(k, regular_module(k)));
  const auto m2 = fx::matrix_algebra(2);
  CHECK(det_annihilates(m2, fx::standard_module(m2, 2)));
  const auto h = fx::quaternions();
  CHECK(det_annihilates(h, regular_module(h)));
}

TEST_CASE("Lie bracket presentations") {
  const auto abelian = lie_bracket_presentation(fx::abelian_lie(2));
  CHECK(abelian.relations.is_zero());
  const auto ra = invariants(abelian, abelian.default_order());
  CHECK(ra.pd == 0);
  CHECK(ra.hilbert == HilbertSeries{{2}, 2});

  const auto two = lie_bracket_presentation(fx::nonabelian2());
  CHECK(two.relations(1, 1) == Polynomial::variable(2, 0));
  CHECK(two.relations(1, 0) == -Polynomial::variable(2, 1));
  const auto r2 = invariants(two, two.default_order());
  CHECK(r2.krull_dim == 2);
  CHECK(r2.pd >= 2);
  CHECK_FALSE(r2.is_cm);

  const auto heis = lie_bracket_presentation(fx::heisenberg());
  CHECK(invariants(heis, heis.default_order()).krull_dim == 3);

  LieAlgebra bad = fx::nonabelian2();
  bad.c[1][0][1] = Scalar(1);
  CHECK_FALSE(validate_lie(bad).ok);
  CHECK_THROWS_AS(lie_bracket_presentation(bad), InputError);
}

TEST_CASE("x_i y_j demo has Krull dimension 2") {
  const auto r = homological_report(fx::xy_demo());
  CHECK(r.krull_dim == 2);
}

TEST_CASE("zero module") {
  const auto k = fx::ground_field();
  Representation zero{0, {Matrix(0, 0)}};
  const auto r = invariants(k, zero, 2);
  CHECK(r.hilbert.is_zero());
  CHECK(r.pd == -1);
}
