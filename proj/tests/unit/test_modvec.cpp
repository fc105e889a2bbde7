#include "doctest.h"

#include <algorithm>
#include <random>

#include "modfun/modvec.hpp"

using namespace modfun;

namespace {

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

ModVector vec(std::vector<Polynomial> comps, std::size_t n) {
  return ModVector::from_components(comps, n);
}

// Generic 2x2 [[a,c],[b,d]] over k[a,b,c,d]; columns (a,b) and (c,d).
std::vector<ModVector> generic_columns() {
  const std::size_t n = 4;
  return {vec({var(n, 0), var(n, 1)}, n), vec({var(n, 2), var(n, 3)}, n)};
}

}  // namespace

TEST_CASE("reduce_once on the worked example") {
  const std::size_t n = 2;
  const auto order = ModuleOrder::standard(n, 2);
  const auto x = var(n, 0);
  const auto y = var(n, 1);
  const auto f = vec({x, y}, n);
  const auto g = vec({x * y, Polynomial(n)}, n);
  const auto r = reduce_once(g, f, order);
  REQUIRE(r);
  CHECK(*r == vec({Polynomial(n), -(y * y)}, n));

  CHECK_FALSE(reduce_once(vec({Polynomial(n), y}, n), f, order));

  ModVector h = f;
  while (auto next = reduce_once(h, f, order)) h = *next;
  CHECK(h.is_zero());
}

TEST_CASE("normal_form examples") {
  const std::size_t n = 2;
  const auto order = ModuleOrder::standard(n, 1);
  const auto x = var(n, 0);
  const auto y = var(n, 1);
  const auto e1 = ModVector::unit(1, n, 0);
  CHECK(normal_form(e1, {vec({x}, n)}, order) == e1);
  CHECK(normal_form(vec({x * x}, n), {vec({x + y}, n)}, order) == vec({y * y}, n));
}

TEST_CASE("s_vector examples") {
  const std::size_t n = 2;
  const auto order = ModuleOrder::pot(RingOrder::deglex(n), 2);
  const auto x = var(n, 0);
  const auto y = var(n, 1);
  const auto f = vec({x, y}, n);
  const auto g = vec({y, x}, n);
  const auto s = s_vector(f, g, order);
  REQUIRE(s);
  CHECK(*s == vec({Polynomial(n), y * y - x * x}, n));
  CHECK(s_vector(f, f, order)->is_zero());
  const auto top = ModuleOrder::standard(n, 2);
  CHECK_FALSE(s_vector(vec({x, Polynomial(n)}, n), vec({Polynomial(n), x}, n), top));
}

TEST_CASE("buchberger on the generic 2x2 columns") {
  const std::size_t n = 4;
  const auto order = ModuleOrder::pot(RingOrder::deglex(n), 2);
  const auto sub = buchberger(generic_columns(), order);
  const auto a = var(n, 0), b = var(n, 1), c = var(n, 2), d = var(n, 3);
  REQUIRE(sub.reduced_gb->size() == 3);
  std::vector<ModVector> expected{vec({a, b}, n), vec({c, d}, n),
                                  vec({Polynomial(n), a * d - b * c}, n)};
  for (const auto& e : expected) {
    CHECK(std::find(sub.reduced_gb->begin(), sub.reduced_gb->end(), e) != sub.reduced_gb->end());
  }
  const auto init = initial_module(sub);
  CHECK(init.size() == 3);
  CHECK(std::count(init.begin(), init.end(), ModMonomial{Monomial{0, 0, 0, 0} * Monomial{1, 0, 0, 1}, 1}) == 1);
  CHECK(contains(vec({Polynomial(n), a * d - b * c}, n), sub));
  CHECK_FALSE(contains(ModVector::unit(2, n, 0), sub));
  CHECK(contains(ModVector(2, n), sub));

  const auto syz = schreyer_syzygies(sub);
  CHECK(syz.size() == 1);
  for (const auto& s : syz) {
    ModVector sum(2, n);
    for (std::size_t k = 0; k < 3; ++k) sum += s.component(k) * (*sub.reduced_gb)[k];
    CHECK(sum.is_zero());
  }
}

TEST_CASE("buchberger small cases") {
  const std::size_t n = 2;
  const auto order = ModuleOrder::standard(n, 1);
  const auto x = var(n, 0);
  const auto y = var(n, 1);
  auto sub = buchberger({vec({x, y}, n)}, ModuleOrder::standard(n, 2));
  REQUIRE(sub.reduced_gb->size() == 1);
  auto sub2 = buchberger({vec({Scalar(3) * x}, n)}, order);
  CHECK((*sub2.reduced_gb)[0] == vec({x}, n));
  auto kos = buchberger({vec({x}, n), vec({y}, n)}, order);
  CHECK(kos.reduced_gb->size() == 2);
  const auto syz = schreyer_syzygies(kos);
  REQUIRE(syz.size() == 1);
  // Sorted descending: x before y, so the Koszul relation is y e1 - x e2.
  CHECK(syz[0] == vec({y, -x}, n));
  CHECK(schreyer_syzygies(sub2).empty());
}

TEST_CASE("reduced GB does not depend on generator order") {
  std::mt19937_64 rng(7);
  const std::size_t n = 3;
  const auto order = ModuleOrder::standard(n, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ModVector> gens;
    for (int g = 0; g < 3; ++g) {
      std::vector<Polynomial> comps(2, Polynomial(n));
      for (auto& c : comps) {
        for (std::size_t v = 0; v < n; ++v) {
          c += Polynomial::variable(n, v, Scalar(static_cast<long>(rng() % 5) - 2));
        }
      }
      gens.push_back(vec(comps, n));
    }
    const auto first = buchberger(gens, order, 2, n);
    std::reverse(gens.begin(), gens.end());
    const auto second = buchberger(gens, order, 2, n);
    CHECK(*first.reduced_gb == *second.reduced_gb);
  }
}

TEST_CASE("product criterion is not applied to modules") {
  const std::size_t n = 2;
  const auto order = ModuleOrder::pot(RingOrder::deglex(n), 2);
  const auto x = var(n, 0);
  const auto y = var(n, 1);
  const auto sub = buchberger({vec({x, y}, n), vec({y, Polynomial(n)}, n)}, order);
  CHECK(contains(vec({Polynomial(n), y * y}, n), sub));
}
