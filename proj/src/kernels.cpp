#include "modfun/kernels.hpp"

#include <cstddef>

#include "modfun/errors.hpp"

namespace modfun {

namespace {

Polynomial dot(const PolyMatrix& a, const PolyMatrix& b, std::size_t r, std::size_t c) {
  Polynomial acc(a.nvars());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (a(r, k).is_zero() || b(k, c).is_zero()) continue;
    acc += a(r, k) * b(k, c);
  }
  return acc;
}

void check_shapes(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix dimensions do not match");
  if (a.nvars() != b.nvars()) throw InputError("matrices over different rings");
}

}  // namespace

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
  check_shapes(a, b);
  PolyMatrix out(a.rows(), b.cols(), a.nvars());
  const auto cells = static_cast<std::ptrdiff_t>(a.rows() * b.cols());
#pragma omp parallel for schedule(dynamic, 4) if (cells > 16)
  for (std::ptrdiff_t idx = 0; idx < cells; ++idx) {
    const auto r = static_cast<std::size_t>(idx) / b.cols();
    const auto c = static_cast<std::size_t>(idx) % b.cols();
    out(r, c) = dot(a, b, r, c);
  }
  return out;
}

PolyMatrix matmul_serial(const PolyMatrix& a, const PolyMatrix& b) {
  check_shapes(a, b);
  PolyMatrix out(a.rows(), b.cols(), a.nvars());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = dot(a, b, r, c);
  }
  return out;
}

std::vector<ModVector> normal_forms(const std::vector<ModVector>& vs,
                                    const std::vector<ModVector>& basis, const ModuleOrder& order) {
  // Exceptions cannot leave an OpenMP region, so validate up front.
  for (const auto& v : vs) {
    for (const auto& b : basis) {
      if (b.is_zero()) throw DomainError("zero vector in reduction basis");
      if (b.rank() != v.rank()) throw InputError("vectors from different free modules");
    }
  }
  std::vector<ModVector> out(vs.size());
  const auto n = static_cast<std::ptrdiff_t>(vs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = normal_form(vs[static_cast<std::size_t>(i)], basis, order);
  }
  return out;
}

std::vector<ModVector> normal_forms_serial(const std::vector<ModVector>& vs,
                                           const std::vector<ModVector>& basis,
                                           const ModuleOrder& order) {
  std::vector<ModVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(normal_form(v, basis, order));
  return out;
}

}  // namespace modfun
