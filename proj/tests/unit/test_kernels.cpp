#include "doctest.h"

#include <omp.h>

#include <random>

#include "modfun/en_complex.hpp"
#include "modfun/fixtures.hpp"
#include "modfun/fl_functor.hpp"
#include "modfun/kernels.hpp"
#include "modfun/linalg.hpp"
#include "modfun/resolution.hpp"

using namespace modfun;

namespace {

// Oversubscribe so the parallel paths really split work on one core.
struct Threads {
  int saved = omp_get_max_threads();
  Threads() { omp_set_num_threads(4); }
  ~Threads() { omp_set_num_threads(saved); }
};

PolyMatrix generic(std::size_t g, std::size_t f) {
  PolyMatrix m(g, f, g * f);
  for (std::size_t r = 0; r < g; ++r) {
    for (std::size_t c = 0; c < f; ++c) m(r, c) = Polynomial::variable(g * f, r * f + c);
  }
  return m;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, const FieldSpec& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-6, 6);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.from_int(coef(rng) * (rng() % 3 == 0 ? 0 : 1));
  }
  return m;
}

}  // namespace

TEST_CASE("matmul matches its serial twin") {
  Threads t;
  const auto en = build_en(generic(3, 6));
  const auto& ds = en.complex.differentials;
  for (std::size_t i = 0; i + 1 < ds.size(); ++i) CHECK(matmul(ds[i], ds[i + 1]) == matmul_serial(ds[i], ds[i + 1]));
}

TEST_CASE("rref matches its serial twin") {
  Threads t;
  std::mt19937_64 rng(3);
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
    for (int rep = 0; rep < 10; ++rep) {
      const Matrix m = random_matrix(5 + rng() % 20, 5 + rng() % 20, field, rng);
      const Rref a = rref(m), b = rref_serial(m);
      CHECK(a.reduced == b.reduced);
      CHECK(a.pivots == b.pivots);
    }
  }
}

TEST_CASE("normal forms and resolutions agree with the serial paths") {
  Threads t;
  const auto a = fixtures::quaternions();
  const auto q = build_presentation(a, regular_module(a), 2).quotient();
  const Submodule gb = buchberger(q.relations, q.order, q.rank, q.nvars);
  std::vector<ModVector> targets;
  for (const auto& r : q.relations) {
    for (std::size_t v = 0; v < q.nvars; ++v) targets.push_back(Polynomial::variable(q.nvars, v) * r);
  }
  const auto par = normal_forms(targets, *gb.reduced_gb, q.order);
  const auto ser = normal_forms_serial(targets, *gb.reduced_gb, q.order);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i] == ser[i]);
    CHECK(par[i].is_zero());
  }

  ResolutionOptions serial;
  serial.parallel = false;
  const FreeComplex rp = minimal_resolution(q), rs = minimal_resolution(q, serial);
  CHECK(rp.degrees == rs.degrees);
  REQUIRE(rp.differentials.size() == rs.differentials.size());
  for (std::size_t i = 0; i < rp.differentials.size(); ++i) CHECK(rp.differentials[i] == rs.differentials[i]);
  CHECK(first_nonzero_composite(rp, true) == first_nonzero_composite(rp, false));
}
