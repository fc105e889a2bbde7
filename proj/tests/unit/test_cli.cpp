#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "modfun/cli.hpp"
#include "modfun/fixtures.hpp"
#include "modfun/io.hpp"

using namespace modfun;
using io::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "modfun");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(MODFUN_FIXTURE_DIR) + "/" + name + ".json"; }

}  // namespace

TEST_CASE("analyze-algebra on the registry files") {
  const Run m2 = run({"analyze-algebra", fx("m2q")});
  REQUIRE(m2.code == kExitOk);
  const Json a = m2.json()["algebra"];
  CHECK(a["dim"] == 4);
  CHECK(a["radical_dim"] == 0);
  CHECK(a["maximally_central"] == true);
  CHECK(a["common_t"] == 2);

  const Json ut = run({"analyze-algebra", fx("ut2")}).json()["algebra"];
  CHECK(ut["radical_dim"] == 1);
  CHECK(ut["maximally_central"] == false);

  const Json hq = run({"analyze-algebra", fx("h_plus_q")}).json()["algebra"];
  CHECK(hq["blocks"] == 2);
  CHECK(hq["maximally_central"] == true);
  CHECK(hq["equidimensional"] == false);
}

TEST_CASE("invariants reports") {
  const Run r = run({"invariants", fx("m2q"), fx("p2"), "--l", "2"});
  REQUIRE(r.code == kExitOk);
  const Json j = r.json();
  CHECK(io::check_report(j).empty());
  CHECK(j["pd"] == 3);
  CHECK(j["depth"] == 5);
  CHECK(j["multiplicity"] == 4);
  CHECK(j["cm_type"] == 2);
  CHECK(j["hilbert"]["numerator"] == Json::array({2, 2}));
  CHECK(j["presentation"]["matrix"][0][0] == "x1_1");

  const Json q = run({"invariants", fx("quat"), fx("regular"), "--l", "1"}).json();
  CHECK(io::check_report(q).empty());
  CHECK(q["pd"] == 1);
  CHECK(q["is_cm"] == true);
  CHECK(q["det_annihilates"] == true);

  const Json u = run({"invariants", fx("ut2"), fx("regular"), "--l", "2"}).json();
  CHECK(io::check_report(u).empty());
  CHECK(u["is_cm"] == false);

  const Json lex = run({"invariants", fx("m2q"), fx("p2"), "--l", "2", "--order", "lex", "--style", "pot"}).json();
  CHECK(lex["betti"] == j["betti"]);
  CHECK(lex["hilbert"] == j["hilbert"]);
}

TEST_CASE("report checker rejects tampering") {
  Json j = run({"invariants", fx("m2q"), fx("p2"), "--l", "2"}).json();
  j["depth"] = 4;
  CHECK_FALSE(io::check_report(j).empty());
  j = run({"invariants", fx("m2q"), fx("p2"), "--l", "2"}).json();
  j["betti"][1]["rank"] = 5;
  CHECK_FALSE(io::check_report(j).empty());
}

TEST_CASE("output is byte identical across runs") {
  const std::vector<std::string> args{"invariants", fx("quat"), fx("regular"), "--l", "2"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> en{"en", "--g", "2", "--f", "4"};
  CHECK(run(en).out == run(en).out);
}

TEST_CASE("hom0 command") {
  for (const auto& [m1, m2, dim] : std::vector<std::tuple<std::string, std::string, int>>{
           {"ut2_alpha", "ut2_gamma", 0}, {"ut2_standard", "ut2_standard", 1}, {"regular", "regular", 3}}) {
    for (const char* l : {"1", "2"}) {
      const Run r = run({"hom0", fx("ut2"), fx(m1), fx(m2), "--l", l});
      REQUIRE(r.code == kExitOk);
      const Json j = r.json();
      CHECK(j["equal"] == true);
      CHECK(j["hom0"]["dim"] == dim);
      CHECK(j["hom_space"]["dim"] == dim);
    }
  }
}

TEST_CASE("en command") {
  const Json small = run({"en", "--g", "1", "--f", "2", "--verify"}).json();
  CHECK(small["verify"]["ok"] == true);
  CHECK(small["length"] == 2);

  const Json big = run({"en", "--g", "2", "--f", "4", "--verify", "--homology"}).json();
  CHECK(big["verify"]["ok"] == true);
  CHECK(big["length"] == 3);

  const Run scalar = run({"en", "--file", fx("scalar_2x4"), "--verify"});
  REQUIRE(scalar.code == kExitOk);
  CHECK(scalar.json()["verify"]["ok"] == true);

  const Run lin = run({"en", "--file", fx("linear_2x3"), "--verify"});
  REQUIRE(lin.code == kExitOk);
  CHECK(lin.json()["verify"]["ok"] == true);

  CHECK(run({"en", "--g", "3", "--f", "2"}).code == kExitInput);
}

TEST_CASE("exactness-defect command") {
  const Json l1 = run({"exactness-defect", fx("ut2"), fx("regular"), "--subspace", fx("ut2_line"), "--l", "1"}).json();
  CHECK(l1["zero"] == true);
  const Json l2 = run({"exactness-defect", fx("ut2"), fx("regular"), "--subspace", fx("ut2_line"), "--l", "2"}).json();
  CHECK(l2["zero"] == false);
  const Run inline_sub = run({"exactness-defect", fx("ut2"), fx("regular"), "--subspace", R"([["0","1","0"]])", "--l", "2"});
  CHECK(inline_sub.out == run({"exactness-defect", fx("ut2"), fx("regular"), "--subspace", fx("ut2_line"), "--l", "2"}).out);
  // E12 * E22 = E12, so span(E22) is not a submodule.
  CHECK(run({"exactness-defect", fx("ut2"), fx("regular"), "--subspace", R"([["0","0","1"]])"}).code == kExitInput);
}

TEST_CASE("prediction commands") {
  const Run t = run({"check-theorem3", "--n", "2", "--l", "2"});
  CHECK(t.code == kExitOk);
  CHECK(t.json()["pass"] == true);
  const Run c = run({"cross-check", fx("quat"), fx("regular"), "--l", "2"});
  CHECK(c.code == kExitOk);
  CHECK(c.json()["pass"] == true);
  const Run h = run({"cross-check", fx("h_plus_q"), fx("regular"), "--l", "2"});
  CHECK(h.code == kExitOk);
  CHECK(h.json()["pass"] == true);
}

TEST_CASE("lie command") {
  const Json n = run({"lie", fx("lie_nonabelian2")}).json();
  CHECK(n["dim"] == 2);
  CHECK(n["pd"].get<int>() >= 2);
  CHECK(run({"lie", fx("lie_heisenberg")}).code == kExitOk);
}

TEST_CASE("fixture files match the registry") {
  for (const auto& name : fixtures::algebra_names()) {
    const Run r = run({"fixture", name});
    REQUIRE(r.code == kExitOk);
    CHECK_MESSAGE(Json::parse(r.out) == io::load_json(fx(name)), name);
  }
  CHECK(run({"fixture", "m2q", "--module", "p2"}).json() == io::load_json(fx("p2")));
  CHECK(run({"fixture", "qplusq", "--module", "simple1"}).json() == io::load_json(fx("simple1")));
  CHECK(run({"fixture", "lie_heisenberg"}).json() == io::load_json(fx("lie_heisenberg")));
  CHECK(run({"fixture", "nonsense"}).code == kExitInput);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitInput);
  CHECK(run({"invariants", fx("nope"), fx("regular")}).code == kExitInput);
  CHECK(run({"invariants", fx("m2q"), fx("p2"), "--l", "0"}).code == kExitInput);
  CHECK(run({"invariants", fx("m2q"), fx("p2"), "--order", "revlex"}).code == kExitInput);
  CHECK(run({"invariants", fx("m2q"), fx("p3")}).code == kExitInput);
  CHECK(run({"invariants", fx("m2q"), fx("p2"), "--l", "2", "--priority", "0,1"}).code == kExitInput);

  const Run g = run({"invariants", fx("m3q"), fx("regular"), "--l", "2"});
  CHECK(g.code == kExitGuard);
  CHECK(g.err.find("MODFUN_GUARD_VARS") != std::string::npos);
  CHECK(run({"check-theorem3", "--n", "4", "--l", "2"}).code == kExitGuard);
}

TEST_CASE("guard override through the environment") {
  setenv("MODFUN_GUARD_VARS", "4", 1);
  CHECK(run({"invariants", fx("m2q"), fx("p2"), "--l", "2"}).code == kExitGuard);
  unsetenv("MODFUN_GUARD_VARS");
  CHECK(run({"invariants", fx("m2q"), fx("p2"), "--l", "2"}).code == kExitOk);
}
