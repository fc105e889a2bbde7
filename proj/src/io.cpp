#include "modfun/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "modfun/errors.hpp"

namespace modfun::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& field_of(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t size_of(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

Scalar scalar_of(const Json& j, const FieldSpec& field, const std::string& where) {
  try {
    if (j.is_string()) return field.parse(j.get<std::string>());
    if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
  } catch (const InputError& e) {
    fail(where, e.what());
  }
  fail(where, "expected a scalar string");
}

const Json& array_of(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  if (j.size() != n) fail(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  return j;
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

Vec vec_of(const Json& j, std::size_t n, const FieldSpec& field, const std::string& where) {
  array_of(j, n, where);
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar_of(j[i], field, at(where, i)));
  return v;
}

Matrix matrix_of(const Json& j, std::size_t n, const FieldSpec& field, const std::string& where) {
  array_of(j, n, where);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Vec row = vec_of(j[r], n, field, at(where, r));
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

std::vector<std::vector<Vec>> tensor_of(const Json& j, std::size_t d, const FieldSpec& field,
                                        const std::string& where) {
  array_of(j, d, where);
  std::vector<std::vector<Vec>> c(d);
  for (std::size_t i = 0; i < d; ++i) {
    array_of(j[i], d, at(where, i));
    for (std::size_t k = 0; k < d; ++k) c[i].push_back(vec_of(j[i][k], d, field, at(at(where, i), k)));
  }
  return c;
}

Json tensor_to_json(const std::vector<std::vector<Vec>>& c) {
  Json out = Json::array();
  for (const auto& row : c) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(vec_to_json(v));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": JSON parse error at byte " + std::to_string(e.byte));
  }
}

FieldSpec parse_field(const Json& j, const std::string& where) {
  const Json& kind = field_of(j, "kind", where);
  if (!kind.is_string()) fail(where + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "rational") return FieldSpec::rationals();
  if (k == "prime") {
    const std::size_t p = size_of(field_of(j, "p", where), where + ".p");
    try {
      return FieldSpec::prime(p);
    } catch (const InputError& e) {
      fail(where + ".p", e.what());
    }
  }
  fail(where + ".kind", "expected \"rational\" or \"prime\"");
}

Json field_to_json(const FieldSpec& f) {
  if (f.is_rational()) return {{"kind", "rational"}};
  return {{"kind", "prime"}, {"p", f.characteristic}};
}

FinDimAlgebra parse_algebra(const Json& j) {
  FinDimAlgebra a;
  a.field = j.contains("field") ? parse_field(j["field"], "field") : FieldSpec::rationals();
  a.dim = size_of(field_of(j, "dim", "algebra"), "dim");
  a.c = tensor_of(field_of(j, "structure_constants", "algebra"), a.dim, a.field, "structure_constants");
  if (j.contains("identity")) {
    a.identity = vec_of(j["identity"], a.dim, a.field, "identity");
  } else {
    auto id = find_identity(a);
    if (!id) fail("identity", "absent and no two-sided identity exists");
    a.identity = *id;
  }
  const Diagnostics diag = validate_algebra(a);
  if (!diag.ok) fail("algebra", diag.message);
  return a;
}

Json algebra_to_json(const FinDimAlgebra& a) {
  return {{"field", field_to_json(a.field)},
          {"dim", a.dim},
          {"structure_constants", tensor_to_json(a.c)},
          {"identity", vec_to_json(a.identity)}};
}

Representation parse_module(const Json& j, const FinDimAlgebra& a) {
  if (j.is_object() && j.contains("regular")) {
    if (!j["regular"].is_boolean() || !j["regular"].get<bool>()) fail("regular", "expected true");
    return regular_module(a);
  }
  Representation m;
  m.dim = size_of(field_of(j, "dim", "module"), "dim");
  const Json& mats = field_of(j, "matrices", "module");
  array_of(mats, a.dim, "matrices");
  for (std::size_t i = 0; i < a.dim; ++i) m.matrices.push_back(matrix_of(mats[i], m.dim, a.field, at("matrices", i)));
  const Diagnostics diag = validate_representation(a, m);
  if (!diag.ok) fail("module", diag.message);
  return m;
}

Json module_to_json(const Representation& m) {
  Json mats = Json::array();
  for (const auto& x : m.matrices) mats.push_back(matrix_to_json(x));
  return {{"dim", m.dim}, {"matrices", mats}};
}

LieAlgebra parse_lie(const Json& j) {
  LieAlgebra g;
  g.field = j.contains("field") ? parse_field(j["field"], "field") : FieldSpec::rationals();
  g.dim = size_of(field_of(j, "dim", "lie"), "dim");
  g.c = tensor_of(field_of(j, "brackets", "lie"), g.dim, g.field, "brackets");
  return g;
}

Json lie_to_json(const LieAlgebra& g) {
  return {{"field", field_to_json(g.field)}, {"dim", g.dim}, {"brackets", tensor_to_json(g.c)}};
}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names,
                            const FieldSpec& field) {
  const std::size_t nvars = names.size();
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto error = [&](const std::string& what) -> InputError {
    return InputError("polynomial '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + what);
  };
  auto number = [&] {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw error("expected a number");
    return std::string(text.substr(start, pos - start));
  };
  Polynomial out(nvars);
  skip();
  if (pos == text.size()) throw error("empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      throw error("expected '+' or '-'");
    }
    first = false;
    Scalar coef = field.one();
    Monomial mono(nvars);
    while (true) {
      skip();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::string num = number();
        skip();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          skip();
          num += "/" + number();
        }
        coef = coef * field.parse(num);
      } else {
        const std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        if (pos == start) throw error("expected a factor");
        const std::string name(text.substr(start, pos - start));
        std::size_t v = 0;
        while (v < nvars && names[v] != name) ++v;
        if (v == nvars) throw error("unknown variable '" + name + "'");
        unsigned power = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          power = static_cast<unsigned>(std::stoul(number()));
        }
        mono.set(v, mono[v] + power);
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    out += Polynomial::monomial(mono, negative ? -coef : coef);
  }
  return out;
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_to_json(m.row(r)));
  return out;
}

Json poly_matrix_to_json(const PolyMatrix& m, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string(names));
    out.push_back(std::move(row));
  }
  return out;
}

Json hilbert_to_json(const HilbertSeries& h) {
  return {{"numerator", h.numerator}, {"pole_order", h.pole_order}, {"text", h.to_string()}};
}

Json betti_to_json(const BettiTable& b) {
  Json out = Json::array();
  for (const auto& [key, rank] : b) out.push_back({{"h", key.first}, {"d", key.second}, {"rank", rank}});
  return out;
}

Json report_to_json(const HomologicalReport& r, const GradedPresentation& p, const FieldSpec& field) {
  Json j;
  j["presentation"] = {{"ring", {{"field", field_to_json(field)}, {"variables", p.var_names}}},
                       {"rank", p.m},
                       {"matrix", poly_matrix_to_json(p.relations, p.var_names)}};
  j["hilbert"] = hilbert_to_json(r.hilbert);
  j["dim"] = r.krull_dim;
  j["multiplicity"] = r.multiplicity;
  j["betti"] = betti_to_json(r.betti);
  j["pd"] = r.pd;
  j["depth"] = r.depth;
  j["is_cm"] = r.is_cm;
  j["cm_type"] = r.cm_type;
  j["cm_type_outside_hypothesis"] = r.cm_type_outside_hypothesis;
  return j;
}

std::string check_report(const Json& report) {
  try {
    const std::size_t nvars = report.at("presentation").at("ring").at("variables").size();
    BettiTable b;
    int pd = -1;
    for (const auto& e : report.at("betti")) {
      const int h = e.at("h").get<int>();
      b[{h, e.at("d").get<int>()}] = e.at("rank").get<std::size_t>();
      pd = std::max(pd, h);
    }
    HilbertSeries h;
    h.numerator = report.at("hilbert").at("numerator").get<std::vector<std::int64_t>>();
    h.pole_order = report.at("hilbert").at("pole_order").get<int>();
    if (!(euler_characteristic(b, nvars) == h)) return "Euler characteristic differs from the Hilbert series";
    if (h.is_zero()) return "";
    if (report.at("pd").get<int>() != pd) return "pd differs from the Betti table length";
    if (report.at("depth").get<int>() != static_cast<int>(nvars) - pd) return "depth differs from nvars - pd";
    const auto dm = dim_and_multiplicity(h);
    if (report.at("dim").get<int>() != dm.dimension) return "dim differs from the pole order";
    if (report.at("multiplicity").get<std::int64_t>() != dm.multiplicity) return "multiplicity differs from p(1)";
    if (report.at("is_cm").get<bool>() != (dm.dimension == static_cast<int>(nvars) - pd)) {
      return "is_cm differs from depth == dim";
    }
  } catch (const Json::exception& e) {
    return std::string("malformed report: ") + e.what();
  }
  return "";
}

Json algebra_report_to_json(const FinDimAlgebra& a, const AlgebraReport& r) {
  Json blocks = Json::array();
  Json ts = Json::array();
  for (const auto& b : r.blocks) {
    Json t = b.t ? Json(*b.t) : Json(nullptr);
    ts.push_back(t);
    blocks.push_back({{"idempotent", vec_to_json(b.idempotent)},
                      {"dim", b.dim},
                      {"radical_dim", b.radical_dim},
                      {"semisimple_dim", b.semisimple_dim},
                      {"center_dim", b.center_dim},
                      {"quotient_center_dim", b.quotient_center_dim},
                      {"quotient_simple", b.quotient_simple},
                      {"t", t}});
  }
  return {{"dim", a.dim},
          {"field", field_to_json(a.field)},
          {"radical_dim", r.radical_basis.size()},
          {"center_dim", r.center_basis.size()},
          {"blocks", r.blocks.size()},
          {"block_details", blocks},
          {"t", ts},
          {"maximally_central", r.is_maximally_central},
          {"equidimensional", r.is_equidimensional},
          {"common_t", r.common_t ? Json(*r.common_t) : Json(nullptr)},
          {"separability_idempotent", r.azumaya}};
}

Json cross_check_to_json(const CrossCheck& c) {
  Json items = Json::array();
  for (const auto& i : c.items) {
    items.push_back({{"name", i.name}, {"predicted", i.predicted}, {"computed", i.computed}, {"pass", i.pass}});
  }
  return {{"items", items}, {"pass", c.all_pass()}, {"scale", c.scale ? Json(*c.scale) : Json(nullptr)}};
}

Json en_to_json(const ENComplex& c, const std::vector<std::string>& names) {
  Json comps = Json::array();
  for (std::size_t i = 0; i < c.bases.size(); ++i) {
    Json basis = Json::array();
    for (const auto& b : c.bases[i]) basis.push_back(b.label(i));
    comps.push_back({{"index", i},
                     {"rank", c.bases[i].size()},
                     {"degree", c.complex.degrees[i].empty() ? 0 : c.complex.degrees[i][0]},
                     {"basis", basis}});
  }
  Json diffs = Json::array();
  for (std::size_t i = 0; i < c.complex.differentials.size(); ++i) {
    const PolyMatrix& d = c.complex.differentials[i];
    Json entries = Json::array();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      for (std::size_t col = 0; col < d.cols(); ++col) {
        if (!d(r, col).is_zero()) entries.push_back({{"row", r}, {"col", col}, {"value", d(r, col).to_string(names)}});
      }
    }
    diffs.push_back({{"index", i + 1}, {"rows", d.rows()}, {"cols", d.cols()}, {"entries", entries}});
  }
  return {{"g", c.g}, {"f", c.f}, {"length", c.length()}, {"components", comps}, {"differentials", diffs}};
}

Json hom_space_to_json(const HomSpace& h) {
  Json basis = Json::array();
  for (const auto& m : h.basis) basis.push_back(matrix_to_json(m));
  return {{"dim", h.dim}, {"basis", basis}};
}

}  // namespace modfun::io
