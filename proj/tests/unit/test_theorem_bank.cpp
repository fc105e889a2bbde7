#include "doctest.h"

#include <cstdlib>

#include "modfun/errors.hpp"
#include "modfun/theorem_bank.hpp"

using namespace modfun;
namespace fx = modfun::fixtures;

namespace {

void require_pass(const CrossCheck& cc, const std::string& label) {
  for (const auto& item : cc.items) {
    CHECK_MESSAGE(item.pass, (label + ": " + item.name + " predicted " + item.predicted + " computed " + item.computed));
  }
}

}  // namespace

TEST_CASE("closed forms at the named points") {
  const auto a = closed_forms(2, 2, 8);
  CHECK(a.betti == std::vector<std::int64_t>{2, 4, 4, 2});
  CHECK(a.degrees == std::vector<int>{0, 1, 3, 4});
  CHECK(a.cm_type == 2);
  CHECK(a.hilbert == HilbertSeries{{2, 2}, 5});
  CHECK(a.multiplicity == 4);
  CHECK(a.pd == 3);

  const auto b = closed_forms(1, 3, 3);
  CHECK(b.betti == std::vector<std::int64_t>{1, 3, 3, 1});
  CHECK(b.cm_type == 1);
  CHECK(b.hilbert == HilbertSeries{{1}, 0});
  CHECK(b.multiplicity == 1);

  const auto c = closed_forms(2, 1, 4);
  CHECK(c.betti == std::vector<std::int64_t>{2, 2});
  CHECK(c.hilbert == HilbertSeries{{2}, 3});
  CHECK(c.multiplicity == 2);
  CHECK(c.pd == 1);
}

TEST_CASE("closed form identities") {
  for (int n = 1; n <= 8; ++n) {
    for (int l = 1; l * n <= 8; ++l) {
      const int dim_r = n * n * l;
      const auto cf = closed_forms(n, l, dim_r);
      // Euler characteristic of the Betti data equals the Hilbert series.
      BettiTable t = cf.table();
      CHECK(euler_characteristic(t, static_cast<std::size_t>(dim_r)) == cf.hilbert);
      if (l > 1) CHECK(cf.betti.back() == cf.cm_type);
      // Multiplicity is the numerator at t = 1.
      std::int64_t at_one = 0;
      for (auto v : cf.hilbert.numerator) at_one += v;
      CHECK(at_one == cf.multiplicity);
      CHECK(cf.multiplicity == binomial(l * n, n - 1));
    }
  }
}

TEST_CASE("predictions") {
  const auto m2 = predict(fx::matrix_algebra(2), 2);
  CHECK(m2.f_l_exact);
  CHECK(m2.all_modules_cm);
  CHECK(m2.pd == 3);
  const auto ut2 = predict(fx::upper_triangular(2), 2);
  CHECK_FALSE(ut2.f_l_exact);
  CHECK_FALSE(ut2.all_modules_cm);
  for (const auto& name : {"ut2", "h_plus_q", "dual_numbers"}) {
    const auto p = predict(fx::algebra(name), 1);
    CHECK(p.f_l_exact);
    CHECK(p.all_modules_cm);
    CHECK(p.pd == 1);
  }
  CHECK_FALSE(predict(fx::algebra("h_plus_q"), 2).pd.has_value());
}

TEST_CASE("cross checks on the named examples") {
  const auto m2 = fx::matrix_algebra(2);
  require_pass(cross_check(m2, fx::standard_module(m2, 2), 2), "m2/p2");
  const auto h = fx::quaternions();
  const auto hq = cross_check(h, regular_module(h), 2);
  require_pass(hq, "quat/regular");
  CHECK(hq.scale == 2);
  const auto ut2 = fx::upper_triangular(2);
  const auto u = cross_check(ut2, regular_module(ut2), 2);
  require_pass(u, "ut2/regular");
  CHECK(u.items.front().predicted == "false");
}

TEST_CASE("cross checks across the fixture registry") {
  for (const auto& nm : fx::all_modules()) {
    const auto a = fx::algebra(nm.algebra);
    const auto m = fx::module(nm.algebra, nm.module);
    for (int l = 1; l <= 2; ++l) {
      if (a.dim * static_cast<std::size_t>(l) > 12) continue;
      require_pass(cross_check(a, m, l), nm.algebra + "/" + nm.module + " l=" + std::to_string(l));
    }
  }
}

TEST_CASE("regular module biconditional") {
  // F_l(A) is CM for l > 1 exactly when A is equidimensional maximally central.
  for (const auto& name : fx::algebra_names()) {
    const auto a = fx::algebra(name);
    if (a.dim * 2 > 12) continue;
    const auto v = maximally_central_verdict(a);
    const auto r = invariants(a, regular_module(a), 2);
    CHECK_MESSAGE(r.is_cm == (v.is_maximally_central && v.is_equidimensional), name);
  }
}

TEST_CASE("guards") {
  const auto m3 = fx::matrix_algebra(3);
  CHECK_THROWS_AS(cross_check(m3, fx::standard_module(m3, 3), 2), GuardError);
  CHECK_THROWS_AS(check_theorem3(4, 2), GuardError);
  setenv("MODFUN_GUARD_VARS", "20", 1);
  CHECK(guard_vars(12) == 20);
  setenv("MODFUN_GUARD_VARS", "x", 1);
  CHECK_THROWS_AS(guard_vars(12), InputError);
  unsetenv("MODFUN_GUARD_VARS");
  CHECK(guard_vars(12) == 12);
}

TEST_CASE("column module closed forms on small cases") {
  for (auto [n, l] : {std::pair{1, 2}, {1, 3}, {2, 1}, {2, 2}}) {
    require_pass(check_theorem3(n, l), std::to_string(n) + "," + std::to_string(l));
  }
}
