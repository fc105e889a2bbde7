#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "modfun/en_complex.hpp"
#include "modfun/fdalgebra.hpp"
#include "modfun/fixtures.hpp"
#include "modfun/fl_functor.hpp"
#include "modfun/theorem_bank.hpp"

namespace modfun::io {

using Json = nlohmann::json;  // std::map backed, so keys are emitted sorted

/// Reads and parses a JSON file; InputError names the file and byte offset.
Json load_json(const std::string& path);

FieldSpec parse_field(const Json& j, const std::string& where);
Json field_to_json(const FieldSpec& f);

/// AlgebraFile: {field, dim, structure_constants, identity?}. The identity is
/// solved for when absent. Throws InputError with the offending field path.
FinDimAlgebra parse_algebra(const Json& j);
Json algebra_to_json(const FinDimAlgebra& a);

/// ModuleFile: {dim, matrices}, or {"regular": true} for the regular module
/// of whichever algebra it is paired with.
Representation parse_module(const Json& j, const FinDimAlgebra& a);
Json module_to_json(const Representation& m);

/// LieFile: {field, dim, brackets} with brackets[i][j] the coordinates of [e_i, e_j].
LieAlgebra parse_lie(const Json& j);
Json lie_to_json(const LieAlgebra& g);

/// Terms like "3/2*x1_1^2 - x2_1" over the given variable names.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names,
                            const FieldSpec& field);

Json vec_to_json(const Vec& v);
Json matrix_to_json(const Matrix& m);
Json poly_matrix_to_json(const PolyMatrix& m, const std::vector<std::string>& names);
Json hilbert_to_json(const HilbertSeries& h);
Json betti_to_json(const BettiTable& b);

/// ReportFile for F_l(M).
Json report_to_json(const HomologicalReport& r, const GradedPresentation& p, const FieldSpec& field);
/// Re-validates an emitted report: Euler characteristic against the series,
/// depth against pd, CM flag against depth and dimension. Returns the first
/// inconsistency, or an empty string.
std::string check_report(const Json& report);

Json algebra_report_to_json(const FinDimAlgebra& a, const AlgebraReport& r);
Json cross_check_to_json(const CrossCheck& c);
Json en_to_json(const ENComplex& c, const std::vector<std::string>& names);
Json hom_space_to_json(const HomSpace& h);

}  // namespace modfun::io
