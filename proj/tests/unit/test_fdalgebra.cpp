#include "doctest.h"

#include "modfun/errors.hpp"
#include "modfun/fixtures.hpp"

using namespace modfun;
namespace fx = modfun::fixtures;

namespace {

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] - b[i]).is_zero()) return false;
  }
  return true;
}

// Brute force: the span is a two-sided ideal and nilpotent of index <= dim.
void check_radical(const FinDimAlgebra& a) {
  const auto rad = radical(a);
  for (const auto& r : rad) {
    for (std::size_t i = 0; i < a.dim; ++i) {
      CHECK(in_span(rad, a.mul(a.basis_vector(i), r)));
      CHECK(in_span(rad, a.mul(r, a.basis_vector(i))));
    }
  }
  std::vector<Vec> power = rad;
  for (std::size_t k = 1; k < a.dim && !power.empty(); ++k) {
    std::vector<Vec> next;
    for (const auto& x : power) {
      for (const auto& r : rad) next.push_back(a.mul(x, r));
    }
    power = span_basis(next, a.dim);
  }
  CHECK(power.empty());
  const FinDimAlgebra quotient = quotient_algebra(a, rad);
  CHECK(radical(quotient).empty());
}

void check_blocks(const FinDimAlgebra& a) {
  const auto blocks = block_decomposition(a);
  Vec sum(a.dim, a.zero());
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    sum = axpy(Scalar(1), blocks[x], sum);
    CHECK(vec_eq(a.mul(blocks[x], blocks[x]), blocks[x]));
    for (std::size_t y = 0; y < blocks.size(); ++y) {
      if (x != y) CHECK(is_zero(a.mul(blocks[x], blocks[y])));
    }
    for (std::size_t i = 0; i < a.dim; ++i) {
      CHECK(vec_eq(a.mul(blocks[x], a.basis_vector(i)), a.mul(a.basis_vector(i), blocks[x])));
    }
  }
  CHECK(vec_eq(sum, a.identity));
}

}  // namespace

TEST_CASE("validate_algebra") {
  CHECK(validate_algebra(fx::matrix_algebra(2)).ok);
  CHECK(validate_algebra(fx::quaternions()).ok);
  FinDimAlgebra bad = fx::matrix_algebra(2);
  bad.c[0][0][0] = Scalar(2);
  const auto diag = validate_algebra(bad);
  CHECK_FALSE(diag.ok);
  // Scaling f_0 f_0 alone keeps (f_0 f_0) f_0 = f_0 (f_0 f_0).
  CHECK(diag.message.find("(f_0,f_0,f_1)") != std::string::npos);
  FinDimAlgebra skew = fx::matrix_algebra(2);
  skew.c[0][0][1] = Scalar(1);
  const auto diag2 = validate_algebra(skew);
  CHECK_FALSE(diag2.ok);
  CHECK(diag2.message.find("(f_0,f_0,f_0)") != std::string::npos);
}

TEST_CASE("every fixture validates") {
  for (const auto& name : fx::algebra_names()) {
    const auto a = fx::algebra(name);
    CHECK_MESSAGE(validate_algebra(a).ok, name);
    for (const auto& mod : fx::module_names(name)) {
      CHECK_MESSAGE(validate_representation(a, fx::module(name, mod)).ok, (name + "/" + mod));
    }
  }
}

TEST_CASE("radical and center") {
  const auto ut2 = fx::upper_triangular(2);
  const auto rad = radical(ut2);
  REQUIRE(rad.size() == 1);
  CHECK(in_span(rad, ut2.basis_vector(1)));
  CHECK(radical(fx::matrix_algebra(2)).empty());
  const auto dual = radical(fx::dual_numbers());
  REQUIRE(dual.size() == 1);
  CHECK(in_span(dual, Vec{Scalar(0), Scalar(1)}));

  CHECK(center(fx::matrix_algebra(2)).size() == 1);
  CHECK(in_span(center(fx::matrix_algebra(2)), fx::matrix_algebra(2).identity));
  CHECK(center(fx::diagonal(2)).size() == 2);
  CHECK(center(ut2).size() == 1);

  for (const auto& name : fx::algebra_names()) check_radical(fx::algebra(name));
  CHECK_THROWS_AS(radical(fx::matrix_algebra(2, FieldSpec::prime(3))), DomainError);
}

TEST_CASE("block decomposition") {
  const auto qq = fx::diagonal(2);
  const auto b = block_decomposition(qq);
  REQUIRE(b.size() == 2);
  CHECK(vec_eq(b[0], Vec{Scalar(1), Scalar(0)}));
  CHECK(vec_eq(b[1], Vec{Scalar(0), Scalar(1)}));
  CHECK(block_decomposition(fx::upper_triangular(2)).size() == 1);

  const auto mix = fx::product(fx::matrix_algebra(2), fx::dual_numbers());
  const auto report = maximally_central_verdict(mix);
  REQUIRE(report.blocks.size() == 2);
  CHECK(report.blocks[0].dim == 4);
  CHECK(report.blocks[1].dim == 2);

  for (const auto& name : fx::algebra_names()) check_blocks(fx::algebra(name));
  check_blocks(mix);
  check_blocks(fx::product(fx::diagonal(3), fx::upper_triangular(2)));
}

TEST_CASE("maximally central verdicts") {
  auto m2 = maximally_central_verdict(fx::matrix_algebra(2));
  CHECK(m2.is_maximally_central);
  CHECK(m2.is_equidimensional);
  CHECK(m2.common_t == 2);

  auto h = maximally_central_verdict(fx::quaternions());
  CHECK(h.is_maximally_central);
  CHECK(h.common_t == 2);
  CHECK(h.blocks[0].quotient_center_dim == 1);

  auto ut2 = maximally_central_verdict(fx::upper_triangular(2));
  CHECK_FALSE(ut2.is_maximally_central);
  CHECK(ut2.blocks.size() == 1);
  CHECK_FALSE(ut2.blocks[0].quotient_simple);
  CHECK_FALSE(maximally_central_verdict(fx::upper_triangular(3)).is_maximally_central);

  auto hq = maximally_central_verdict(fx::algebra("h_plus_q"));
  CHECK(hq.is_maximally_central);
  CHECK_FALSE(hq.is_equidimensional);
  REQUIRE(hq.blocks.size() == 2);
  CHECK(hq.blocks[0].t == 2);
  CHECK(hq.blocks[1].t == 1);

  auto dual = maximally_central_verdict(fx::dual_numbers());
  CHECK(dual.is_maximally_central);
  CHECK(dual.common_t == 1);

  // Every verdict already cross-checks against the separability idempotent.
  for (const auto& name : fx::algebra_names()) {
    const auto r = maximally_central_verdict(fx::algebra(name));
    CHECK_MESSAGE(r.azumaya == r.is_maximally_central, name);
  }
}

TEST_CASE("quaternions split over F_5 with the same t") {
  const auto f5 = FieldSpec::prime(5);
  const auto h = maximally_central_verdict(fx::quaternions(f5));
  const auto m = maximally_central_verdict(fx::matrix_algebra(2, f5));
  CHECK(h.is_maximally_central);
  CHECK(h.common_t == 2);
  CHECK(m.common_t == 2);
  // Over F_5 the center of the quotient is still the prime field.
  CHECK(h.blocks[0].quotient_center_dim == 1);
}

TEST_CASE("simple center extension: Q(i) as a Q-algebra") {
  // Q[x]/(x^2+1) is a field: one block, commutative, t = 1.
  FinDimAlgebra a = fx::truncated_polynomial(2);
  a.c[1][1] = Vec{Scalar(-1), Scalar(0)};
  REQUIRE(validate_algebra(a).ok);
  const auto r = maximally_central_verdict(a);
  CHECK(r.blocks.size() == 1);
  CHECK(r.blocks[0].quotient_simple);
  CHECK(r.blocks[0].quotient_center_dim == 2);
  CHECK(r.common_t == 1);
}

TEST_CASE("hom_space dimensions") {
  const auto m2 = fx::matrix_algebra(2);
  const auto p = fx::standard_module(m2, 2);
  CHECK(hom_space(m2, p, p).dim == 1);

  const auto qq = fx::diagonal(2);
  CHECK(hom_space(qq, fx::one_dimensional(qq, 0), fx::one_dimensional(qq, 1)).dim == 0);

  const auto k = fx::ground_field();
  Representation k3{3, {Matrix::identity(3)}};
  CHECK(hom_space(k, k3, k3).dim == 9);

  const auto h = fx::quaternions();
  CHECK(hom_space(h, regular_module(h), regular_module(h)).dim == 4);
}

TEST_CASE("sub and quotient representations") {
  const auto ut2 = fx::upper_triangular(2);
  const auto std2 = fx::standard_module(ut2, 2);
  const auto [sub, quot] = sub_quotient_reps(ut2, std2, {Vec{Scalar(1), Scalar(0)}});
  CHECK(sub.dim == 1);
  CHECK(quot.dim == 1);
  const auto alpha = fx::module("ut2", "alpha");
  const auto gamma = fx::module("ut2", "gamma");
  for (std::size_t i = 0; i < ut2.dim; ++i) {
    CHECK(sub.matrices[i] == alpha.matrices[i]);
    CHECK(quot.matrices[i] == gamma.matrices[i]);
  }
  const auto [z, all] = sub_quotient_reps(ut2, std2, {});
  CHECK(z.dim == 0);
  CHECK(all.dim == 2);
  const auto [all2, z2] = sub_quotient_reps(ut2, std2, {Vec{Scalar(1), Scalar(0)}, Vec{Scalar(0), Scalar(1)}});
  CHECK(all2.dim == 2);
  CHECK(z2.dim == 0);
  CHECK_THROWS_AS(sub_quotient_reps(ut2, std2, {Vec{Scalar(0), Scalar(1)}}), InputError);
}

TEST_CASE("faithful quotient") {
  const auto qq = fx::diagonal(2);
  const auto [q, m] = faithful_quotient(qq, fx::one_dimensional(qq, 0));
  CHECK(q.dim == 1);
  CHECK(validate_algebra(q).ok);
  CHECK(validate_representation(q, m).ok);
  const auto hq = fx::algebra("h_plus_q");
  const auto [q2, m2] = faithful_quotient(hq, fx::module("h_plus_q", "simple1"));
  CHECK(q2.dim == 4);
  CHECK(maximally_central_verdict(q2).common_t == 2);
}
