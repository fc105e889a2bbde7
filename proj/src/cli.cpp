#include "modfun/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "modfun/errors.hpp"
#include "modfun/io.hpp"

namespace modfun {

namespace {

using io::Json;

struct OrderFlags {
  std::string kind = "deglex";
  std::string style = "top";
  std::string priority;  // comma separated variable indices, greatest first
};

void add_order_flags(CLI::App* cmd, OrderFlags& o) {
  cmd->add_option("--order", o.kind, "Monomial order: deglex or lex")->check(CLI::IsMember({"deglex", "lex"}));
  cmd->add_option("--style", o.style, "Module order: top or pot")->check(CLI::IsMember({"top", "pot"}));
  cmd->add_option("--priority", o.priority, "Variable priority, greatest first (default: last variable greatest)");
}

ModuleOrder make_order(const OrderFlags& o, std::size_t nvars, std::size_t rank) {
  std::vector<std::uint32_t> prio;
  if (o.priority.empty()) {
    for (std::size_t i = nvars; i-- > 0;) prio.push_back(static_cast<std::uint32_t>(i));
  } else {
    std::stringstream ss(o.priority);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        prio.push_back(static_cast<std::uint32_t>(std::stoul(item)));
      } catch (const std::exception&) {
        throw InputError("--priority: '" + item + "' is not a variable index");
      }
    }
    if (prio.size() != nvars) {
      throw InputError("--priority lists " + std::to_string(prio.size()) + " variables, the ring has " +
                       std::to_string(nvars));
    }
  }
  const RingOrder ring(o.kind == "lex" ? RingOrder::Kind::Lex : RingOrder::Kind::DegLex, prio);
  return o.style == "pot" ? ModuleOrder::pot(ring, rank) : ModuleOrder::top(ring, rank);
}

void guard(std::size_t nvars, std::ostream& err) {
  const std::size_t hard = guard_vars(kHardGuardVars);
  if (nvars > hard) {
    throw GuardError("the ring would have " + std::to_string(nvars) + " variables; the limit is " +
                     std::to_string(hard) + " (set MODFUN_GUARD_VARS to raise it)");
  }
  if (nvars > kSoftGuardVars) {
    err << "warning: " << nvars << " variables exceeds the desk budget of " << kSoftGuardVars << "\n";
  }
}

FinDimAlgebra load_algebra(const std::string& path) {
  try {
    return io::parse_algebra(io::load_json(path));
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + msg);
  }
}

Representation load_module(const std::string& path, const FinDimAlgebra& a) {
  try {
    return io::parse_module(io::load_json(path), a);
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + msg);
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::vector<Vec> parse_subspace(const std::string& text, const FinDimAlgebra& a, std::size_t m) {
  Json j;
  if (!text.empty() && text.front() == '[') {
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw InputError("--subspace: JSON parse error at byte " + std::to_string(e.byte));
    }
  } else {
    j = io::load_json(text);
  }
  if (!j.is_array()) throw InputError("--subspace: expected an array of vectors");
  std::vector<Vec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m) {
      throw InputError("--subspace[" + std::to_string(i) + "]: expected " + std::to_string(m) + " entries");
    }
    Vec v;
    for (const auto& s : j[i]) {
      if (s.is_string()) v.push_back(a.field.parse(s.get<std::string>()));
      else if (s.is_number_integer()) v.push_back(a.field.from_int(s.get<std::int64_t>()));
      else throw InputError("--subspace[" + std::to_string(i) + "]: expected scalar strings");
    }
    out.push_back(std::move(v));
  }
  return out;
}

PolyMatrix generic_matrix(std::size_t g, std::size_t f, std::vector<std::string>& names) {
  names.clear();
  for (std::size_t r = 0; r < g; ++r) {
    for (std::size_t c = 0; c < f; ++c) names.push_back("a" + std::to_string(r + 1) + "_" + std::to_string(c + 1));
  }
  PolyMatrix m(g, f, g * f);
  for (std::size_t r = 0; r < g; ++r) {
    for (std::size_t c = 0; c < f; ++c) m(r, c) = Polynomial::variable(g * f, r * f + c);
  }
  return m;
}

// {field?, variables: [...], matrix: [[poly strings]]}
PolyMatrix matrix_from_file(const std::string& path, std::vector<std::string>& names) {
  const Json j = io::load_json(path);
  const FieldSpec field = j.contains("field") ? io::parse_field(j["field"], path + ": field") : FieldSpec::rationals();
  if (!j.contains("variables") || !j["variables"].is_array()) throw InputError(path + ": missing 'variables' array");
  names = j["variables"].get<std::vector<std::string>>();
  if (names.size() > kMaxVars) throw GuardError(path + ": too many variables");
  if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].empty()) {
    throw InputError(path + ": missing 'matrix' rows");
  }
  const Json& rows = j["matrix"];
  const std::size_t g = rows.size(), f = rows[0].size();
  PolyMatrix m(g, f, names.size());
  for (std::size_t r = 0; r < g; ++r) {
    if (!rows[r].is_array() || rows[r].size() != f) {
      throw InputError(path + ": matrix[" + std::to_string(r) + "] has the wrong length");
    }
    for (std::size_t c = 0; c < f; ++c) {
      if (!rows[r][c].is_string()) {
        throw InputError(path + ": matrix[" + std::to_string(r) + "][" + std::to_string(c) + "] is not a string");
      }
      m(r, c) = io::parse_polynomial(rows[r][c].get<std::string>(), names, field);
    }
  }
  return m;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Module functors of finite-dimensional algebras"};
  app.require_subcommand(1);

  std::string algebra_path, module_path, module2_path, subspace, name, module_name, matrix_file;
  int l = 1, n = 0, g = 0, f = 0;
  bool verify = false, homology = false;
  OrderFlags order;

  auto* analyze = app.add_subcommand("analyze-algebra", "Radical, center, blocks and verdicts");
  analyze->add_option("algebra", algebra_path, "AlgebraFile")->required();

  auto* inv = app.add_subcommand("invariants", "Homological invariants of F_l(M)");
  inv->add_option("algebra", algebra_path, "AlgebraFile")->required();
  inv->add_option("module", module_path, "ModuleFile")->required();
  inv->add_option("--l", l, "Number of generic elements")->check(CLI::PositiveNumber);
  add_order_flags(inv, order);

  auto* thm3 = app.add_subcommand("check-theorem3", "Closed forms against the engine for M_n");
  thm3->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  thm3->add_option("--l", l)->required()->check(CLI::PositiveNumber);

  auto* en = app.add_subcommand("en", "Eagon-Northcott complex of a g x f matrix");
  en->add_option("--g", g, "Rows of a generic matrix")->check(CLI::PositiveNumber);
  en->add_option("--f", f, "Columns of a generic matrix")->check(CLI::PositiveNumber);
  en->add_option("--file", matrix_file, "Matrix file {variables, matrix}");
  en->add_flag("--verify", verify, "Check d d = 0");
  en->add_flag("--homology", homology, "Check homology at every positive position");

  auto* hom = app.add_subcommand("hom0", "Degree-0 homomorphisms F_l(M1) -> F_l(M2)");
  hom->add_option("algebra", algebra_path)->required();
  hom->add_option("module1", module_path)->required();
  hom->add_option("module2", module2_path)->required();
  hom->add_option("--l", l)->check(CLI::PositiveNumber);

  auto* defect = app.add_subcommand("exactness-defect", "Kernel series of F_l(sub) -> F_l(M)");
  defect->add_option("algebra", algebra_path)->required();
  defect->add_option("module", module_path)->required();
  defect->add_option("--subspace", subspace, "Invariant subspace: inline JSON array or a file")->required();
  defect->add_option("--l", l)->check(CLI::PositiveNumber);

  auto* cross = app.add_subcommand("cross-check", "Predictions against the engine");
  cross->add_option("algebra", algebra_path)->required();
  cross->add_option("module", module_path)->required();
  cross->add_option("--l", l)->check(CLI::PositiveNumber);

  auto* lie = app.add_subcommand("lie", "F(L) for the adjoint construction of a Lie algebra");
  lie->add_option("lie", algebra_path, "LieFile")->required();
  add_order_flags(lie, order);

  auto* fixture = app.add_subcommand("fixture", "Emit a registered fixture as JSON");
  fixture->add_option("name", name, "Algebra or Lie fixture name, or 'list'")->required();
  fixture->add_option("--module", module_name, "Module name for that algebra");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) {
      const FinDimAlgebra a = load_algebra(algebra_path);
      emit(out, {{"algebra", io::algebra_report_to_json(a, maximally_central_verdict(a))}});
    } else if (*inv) {
      const FinDimAlgebra a = load_algebra(algebra_path);
      const Representation m = load_module(module_path, a);
      guard(a.dim * static_cast<std::size_t>(l), err);
      const GradedPresentation p = build_presentation(a, m, static_cast<std::size_t>(l));
      const ModuleOrder ord = make_order(order, p.nvars, p.m);
      const HomologicalReport r = invariants(p, ord);
      Json j = io::report_to_json(r, p, a.field);
      j["order"] = {{"kind", order.kind}, {"style", order.style}, {"priority", ord.ring_order().priority()}};
      j["l"] = l;
      if (l == 1) j["det_annihilates"] = det_annihilates(a, m);
      emit(out, j);
    } else if (*thm3) {
      const CrossCheck cc = check_theorem3(n, l);
      Json j = io::cross_check_to_json(cc);
      j["n"] = n;
      j["l"] = l;
      emit(out, j);
      return cc.all_pass() ? kExitOk : kExitInvariant;
    } else if (*en) {
      std::vector<std::string> names;
      PolyMatrix phi;
      if (!matrix_file.empty()) {
        phi = matrix_from_file(matrix_file, names);
      } else {
        if (g == 0 || f == 0) throw InputError("en: give --g and --f, or --file");
        if (g * f > static_cast<int>(guard_vars(kHardGuardVars) * 2)) throw GuardError("generic matrix too large");
        phi = generic_matrix(static_cast<std::size_t>(g), static_cast<std::size_t>(f), names);
      }
      const ENComplex c = build_en(phi);
      Json j = io::en_to_json(c, names);
      if (verify) {
        const ComplexCheck chk = verify_complex(c);
        j["verify"] = {{"ok", chk.ok}};
        if (!chk.ok) j["verify"].update({{"position", chk.position}, {"row", chk.row}, {"col", chk.col}});
      }
      if (homology) {
        Json h = Json::array();
        for (std::size_t i = 1; i <= c.length(); ++i) h.push_back(homology_is_zero(c.complex, i));
        j["homology_zero"] = h;
      }
      emit(out, j);
    } else if (*hom) {
      const FinDimAlgebra a = load_algebra(algebra_path);
      const Representation m1 = load_module(module_path, a);
      const Representation m2 = load_module(module2_path, a);
      guard(a.dim * static_cast<std::size_t>(l), err);
      const HomSpace h0 = hom0(a, m1, m2, static_cast<std::size_t>(l));
      const HomSpace ha = hom_space(a, m1, m2);
      emit(out, {{"hom0", io::hom_space_to_json(h0)},
                 {"hom_space", io::hom_space_to_json(ha)},
                 {"equal", h0.dim == ha.dim},
                 {"l", l}});
    } else if (*defect) {
      const FinDimAlgebra a = load_algebra(algebra_path);
      const Representation m = load_module(module_path, a);
      guard(a.dim * static_cast<std::size_t>(l), err);
      const auto sub = parse_subspace(subspace, a, m.dim);
      const HilbertSeries h = exactness_defect(a, m, sub, static_cast<std::size_t>(l));
      emit(out, {{"defect", io::hilbert_to_json(h)}, {"zero", h.is_zero()}, {"l", l},
                 {"sub_dim", span_basis(sub, m.dim).size()}});
    } else if (*cross) {
      const FinDimAlgebra a = load_algebra(algebra_path);
      const Representation m = load_module(module_path, a);
      const CrossCheck cc = cross_check(a, m, l);
      Json j = io::cross_check_to_json(cc);
      j["l"] = l;
      emit(out, j);
      return cc.all_pass() ? kExitOk : kExitInvariant;
    } else if (*lie) {
      const LieAlgebra gl = io::parse_lie(io::load_json(algebra_path));
      guard(gl.dim, err);
      const GradedPresentation p = lie_bracket_presentation(gl);
      const HomologicalReport r = invariants(p, make_order(order, p.nvars, p.m));
      emit(out, io::report_to_json(r, p, gl.field));
    } else if (*fixture) {
      if (name == "list") {
        Json j;
        for (const auto& a : fixtures::algebra_names()) j["algebras"][a] = fixtures::module_names(a);
        j["lie"] = {"lie_abelian2", "lie_heisenberg", "lie_nonabelian2"};
        emit(out, j);
      } else if (name == "lie_abelian2") {
        emit(out, io::lie_to_json(fixtures::abelian_lie(2)));
      } else if (name == "lie_nonabelian2") {
        emit(out, io::lie_to_json(fixtures::nonabelian2()));
      } else if (name == "lie_heisenberg") {
        emit(out, io::lie_to_json(fixtures::heisenberg()));
      } else if (module_name.empty()) {
        emit(out, io::algebra_to_json(fixtures::algebra(name)));
      } else {
        emit(out, io::module_to_json(fixtures::module(name, module_name)));
      }
    }
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace modfun
