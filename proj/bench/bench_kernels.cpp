// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "modfun/en_complex.hpp"
#include "modfun/fixtures.hpp"
#include "modfun/fl_functor.hpp"
#include "modfun/kernels.hpp"
#include "modfun/linalg.hpp"

using namespace modfun;

namespace {

PolyMatrix generic(std::size_t g, std::size_t f) {
  PolyMatrix m(g, f, g * f);
  for (std::size_t r = 0; r < g; ++r) {
    for (std::size_t c = 0; c < f; ++c) m(r, c) = Polynomial::variable(g * f, r * f + c);
  }
  return m;
}

const ENComplex& en36() {
  static const ENComplex c = build_en(generic(3, 6));
  return c;
}

Matrix random_matrix(std::size_t n) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-20, 20);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(static_cast<long>(coef(rng)));
  }
  return m;
}

struct GbInput {
  Submodule sub;
  std::vector<detail::OrderedVec> ordered;
  ModuleOrder next;
  std::vector<ModVector> targets;
};

const GbInput& quaternion_gb() {
  static const GbInput in = [] {
    const auto a = fixtures::quaternions();
    const auto q = build_presentation(a, regular_module(a), 2).quotient();
    GbInput out{buchberger(q.relations, q.order, q.rank, q.nvars), {}, {}, {}};
    std::vector<ModMonomial> leads;
    for (const auto& g : *out.sub.reduced_gb) {
      out.ordered.push_back(detail::to_ordered(g, q.order));
      leads.push_back({out.ordered.back().front().mono, out.ordered.back().front().comp});
    }
    out.next = ModuleOrder::schreyer(q.order, leads);
    for (const auto& r : q.relations) {
      for (std::size_t v = 0; v < q.nvars; ++v) {
        for (std::size_t w = v; w < q.nvars; ++w) {
          out.targets.push_back(Polynomial::variable(q.nvars, v) * (Polynomial::variable(q.nvars, w) * r));
        }
      }
    }
    return out;
  }();
  return in;
}

void BM_matmul(benchmark::State& s) {
  const auto& ds = en36().complex.differentials;
  for (auto _ : s) benchmark::DoNotOptimize(matmul(ds[1], ds[2]));
}
void BM_matmul_serial(benchmark::State& s) {
  const auto& ds = en36().complex.differentials;
  for (auto _ : s) benchmark::DoNotOptimize(matmul_serial(ds[1], ds[2]));
}

void BM_rref(benchmark::State& s) {
  const Matrix m = random_matrix(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(rref(m));
}
void BM_rref_serial(benchmark::State& s) {
  const Matrix m = random_matrix(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(rref_serial(m));
}

void BM_syzygy_frame(benchmark::State& s) {
  const auto& in = quaternion_gb();
  for (auto _ : s) benchmark::DoNotOptimize(detail::syzygy_frame(in.ordered, in.sub.order, in.next, true));
}
void BM_syzygy_frame_serial(benchmark::State& s) {
  const auto& in = quaternion_gb();
  for (auto _ : s) benchmark::DoNotOptimize(detail::syzygy_frame(in.ordered, in.sub.order, in.next, false));
}

void BM_normal_forms(benchmark::State& s) {
  const auto& in = quaternion_gb();
  for (auto _ : s) benchmark::DoNotOptimize(normal_forms(in.targets, *in.sub.reduced_gb, in.sub.order));
}
void BM_normal_forms_serial(benchmark::State& s) {
  const auto& in = quaternion_gb();
  for (auto _ : s) benchmark::DoNotOptimize(normal_forms_serial(in.targets, *in.sub.reduced_gb, in.sub.order));
}

}  // namespace

BENCHMARK(BM_matmul)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matmul_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_serial)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_syzygy_frame)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_syzygy_frame_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_normal_forms)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_normal_forms_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
