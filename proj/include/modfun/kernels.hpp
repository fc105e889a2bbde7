#pragma once

// OpenMP kernels. Each has a sequential twin with identical output, used by
// the tests as the reference and by bench/ for timing. Row elimination lives
// in linalg (rref / rref_serial) and the syzygy frame in modvec
// (detail::syzygy_frame with parallel = false).

#include <vector>

#include "modfun/poly_matrix.hpp"

namespace modfun {

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix matmul_serial(const PolyMatrix& a, const PolyMatrix& b);

/// normal_form of every vector against the same basis.
std::vector<ModVector> normal_forms(const std::vector<ModVector>& vs,
                                    const std::vector<ModVector>& basis, const ModuleOrder& order);
std::vector<ModVector> normal_forms_serial(const std::vector<ModVector>& vs,
                                           const std::vector<ModVector>& basis,
                                           const ModuleOrder& order);

}  // namespace modfun
