#include "doctest.h"

#include <random>

#include "modfun/en_complex.hpp"
#include "modfun/errors.hpp"

using namespace modfun;

namespace {

PolyMatrix generic(std::size_t g, std::size_t f) {
  PolyMatrix m(g, f, g * f);
  for (std::size_t r = 0; r < g; ++r) {
    for (std::size_t c = 0; c < f; ++c) m(r, c) = Polynomial::variable(g * f, r * f + c);
  }
  return m;
}

PolyMatrix random_linear(std::size_t g, std::size_t f, std::size_t nvars, FieldSpec field,
                         std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  PolyMatrix m(g, f, nvars);
  for (std::size_t r = 0; r < g; ++r) {
    for (std::size_t c = 0; c < f; ++c) {
      for (std::size_t v = 0; v < nvars; ++v) {
        m(r, c) += Polynomial::variable(nvars, v, field.from_int(coef(rng)));
      }
    }
  }
  return m;
}

}  // namespace

TEST_CASE("basis enumeration orders") {
  using V = std::vector<std::vector<std::size_t>>;
  CHECK(colex_subsets(4, 2) == V{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
  CHECK(lex_multisets(2, 2) == V{{0, 0}, {0, 1}, {1, 1}});
  CHECK(lex_multisets(3, 0) == V{{}});
  CHECK(colex_subsets(3, 0) == V{{}});
}

TEST_CASE("Koszul shape for g = 1") {
  const auto en = build_en(generic(1, 2));
  CHECK(en.length() == 2);
  CHECK(en.complex.rank(0) == 1);
  CHECK(en.complex.rank(1) == 2);
  CHECK(en.complex.rank(2) == 1);
  const auto& d2 = en.complex.differentials[1];
  CHECK(d2(0, 0) == Polynomial::variable(2, 1));
  CHECK(d2(1, 0) == -Polynomial::variable(2, 0));
  CHECK(verify_complex(en).ok);
  CHECK(en.bases[2][0].label(2) == "f1^f2");
}

TEST_CASE("square matrix gives length one") {
  const auto en = build_en(generic(2, 2));
  CHECK(en.length() == 1);
  CHECK(en.complex.differentials[0] == generic(2, 2));
  CHECK_THROWS_AS(build_en(generic(3, 2)), InputError);
}

TEST_CASE("ranks and alternating sums") {
  for (std::size_t g = 1; g <= 3; ++g) {
    for (std::size_t f = g; f <= 6; ++f) {
      const auto en = build_en(generic(g, f));
      long alt = 0;
      for (std::size_t i = 0; i <= en.length(); ++i) {
        CHECK(en.complex.rank(i) == en_rank(g, f, i));
        if (i >= 1) alt += (i % 2 == 1 ? 1 : -1) * static_cast<long>(en.complex.rank(i));
      }
      CHECK(alt == static_cast<long>(g));
      CHECK(verify_complex(en).ok);
    }
  }
  const auto en = build_en(generic(2, 4));
  CHECK(std::vector<std::size_t>{en.complex.rank(0), en.complex.rank(1), en.complex.rank(2), en.complex.rank(3)} ==
        std::vector<std::size_t>{2, 4, 4, 2});
}

TEST_CASE("d d = 0 on random linear forms") {
  std::mt19937_64 rng(17);
  for (const auto field : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
    for (std::size_t g = 1; g <= 2; ++g) {
      for (std::size_t f = g; f <= g + 2; ++f) {
        for (int rep = 0; rep < 5; ++rep) {
          CHECK(verify_complex(build_en(random_linear(g, f, 3, field, rng))).ok);
        }
      }
    }
  }
}

TEST_CASE("sign-flipped d_2 entry is caught at position 1") {
  auto en = build_en(generic(2, 4));
  auto& d2 = en.complex.differentials[1];
  d2(0, 0) = -d2(0, 0);
  const auto check = verify_complex(en);
  CHECK_FALSE(check.ok);
  CHECK(check.position == 1);
}

TEST_CASE("EN complex against the minimal resolution") {
  const auto a = en_matches_resolution(2, 2);
  CHECK(a.match);
  CHECK(a.en == BettiTable{{{0, 0}, 2}, {{1, 1}, 4}, {{2, 3}, 4}, {{3, 4}, 2}});
  const auto b = en_matches_resolution(1, 3);
  CHECK(b.match);
  CHECK(b.resolution == BettiTable{{{0, 0}, 1}, {{1, 1}, 3}, {{2, 2}, 3}, {{3, 3}, 1}});
  const auto c = en_matches_resolution(2, 1);
  CHECK(c.match);
  CHECK(c.en == BettiTable{{{0, 0}, 2}, {{1, 1}, 2}});
  CHECK_THROWS_AS(en_matches_resolution(3, 3), GuardError);
}

TEST_CASE("generic EN complexes are acyclic") {
  for (auto [g, f] : {std::pair<std::size_t, std::size_t>{1, 3}, {2, 4}, {2, 3}}) {
    const auto en = build_en(generic(g, f));
    for (std::size_t i = 1; i <= en.length(); ++i) CHECK(homology_is_zero(en.complex, i));
  }
}
