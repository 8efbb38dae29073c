#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "orthoform/genfuzz.hpp"
#include "orthoform/json_io.hpp"
#include "orthoform/reproduce.hpp"

using namespace orthoform;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ORTHOFORM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "orthoform_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write_doc(const fs::path& dir, const std::string& name,
                   const io::json& doc) {
  fs::path p = dir / name;
  std::ofstream f(p);
  f << io::emit(doc);
  return p;
}

}  // namespace

TEST_CASE("check-form exit codes match the library verdict") {
  fs::path dir = scratch_dir();
  ComplexificationDemo demo = complexification_demo();
  fs::path good = write_doc(dir, "good_form.json", io::form_to_json(demo.form));
  RunResult ok = run_cli("check-form " + good.string());
  CHECK(ok.exit_code == 0);
  io::json verdict = io::parse_text(ok.out);
  CHECK(verdict.at("orthogonal") == true);
  CHECK(verdict.at("oracle_agrees") == true);

  FiniteSpace sp = make_space({"a", "b"}, {});
  RatMatrix m(2, 2);
  m.at(0, 1) = 1;
  fs::path bad = write_doc(dir, "bad_form.json",
                           io::form_to_json(BilinearForm(sp, m)));
  RunResult fail = run_cli("check-form " + bad.string());
  CHECK(fail.exit_code == 1);
  io::json bad_verdict = io::parse_text(fail.out);
  CHECK(bad_verdict.at("orthogonal") == false);
  CHECK_FALSE(bad_verdict.at("counterexample").is_null());
}

TEST_CASE("zero form checks clean") {
  fs::path dir = scratch_dir();
  FiniteSpace sp = make_space({"a", "b"}, {});
  fs::path p = write_doc(dir, "zero_form.json",
                         io::form_to_json(BilinearForm::zero(sp)));
  CHECK(run_cli("check-form " + p.string()).exit_code == 0);
}

TEST_CASE("decompose emits verified functionals") {
  fs::path dir = scratch_dir();
  ComplexificationDemo demo = complexification_demo();
  fs::path p = write_doc(dir, "dec_form.json", io::form_to_json(demo.form));
  fs::path out = dir / "dec_out.json";
  RunResult r = run_cli("decompose " + p.string() + " --out " + out.string());
  CHECK(r.exit_code == 0);
  io::json doc = io::parse_text(r.out);
  CHECK(doc.at("verified") == true);
  Functional phi1 = io::functional_from_json(doc.at("phi1"));
  Functional phi2 = io::functional_from_json(doc.at("phi2"));
  CHECK(compose_form(phi1, phi2) == demo.form);
  CHECK(fs::exists(out));
}

TEST_CASE("complexify reports the eliminability cross-check") {
  fs::path dir = scratch_dir();
  ComplexificationDemo demo = complexification_demo();
  fs::path p = write_doc(dir, "cpx_form.json", io::form_to_json(demo.form));
  RunResult r = run_cli("complexify " + p.string());
  CHECK(r.exit_code == 1);  // extension not orthogonal
  io::json doc = io::parse_text(r.out);
  CHECK(doc.at("extension_orthogonal") == false);
  CHECK(doc.at("phi2_eliminable") == false);
  CHECK(doc.at("agrees") == true);
  CHECK(doc.at("matrix")[0][1] == io::json::array({"1/2", "0"}));
}

TEST_CASE("analyze-map and check-biop on the bundled preserver") {
  fs::path dir = scratch_dir();
  BiopDemo demo = biop_demo();
  fs::path p = write_doc(dir, "map.json", io::map_to_json(demo.map));

  RunResult ana = run_cli("analyze-map " + p.string());
  CHECK(ana.exit_code == 0);
  io::json sdoc = io::parse_text(ana.out);
  CHECK(sdoc.at("phi").at("s3") == "t3");
  CHECK(sdoc.at("phi").at("s4") == "t3");
  CHECK(sdoc.at("z3").empty());

  RunResult biop = run_cli("check-biop " + p.string());
  CHECK(biop.exit_code == 1);
  io::json bdoc = io::parse_text(biop.out);
  CHECK(bdoc.at("biop") == false);
  std::string reason = bdoc.at("reason");
  CHECK(reason.find("F1") != std::string::npos);

  FiniteSpace sp = make_space({"x", "y"}, {{"x", "y"}, {"y", "x"}});
  fs::path idp = write_doc(dir, "id_map.json",
                           io::map_to_json(LinearMap::identity(sp)));
  RunResult good = run_cli("check-biop " + idp.string());
  CHECK(good.exit_code == 0);
  io::json gdoc = io::parse_text(good.out);
  CHECK(gdoc.at("biop") == true);
  LinearMap inverse =
      io::map_from_json(gdoc.at("certificate").at("inverse_map"));
  CHECK(inverse.matrix() == RatMatrix::identity(2));
}

TEST_CASE("reproduce commands assert their outcomes") {
  RunResult cpx = run_cli("reproduce --example complexification");
  CHECK(cpx.exit_code == 0);
  io::json doc = io::parse_text(cpx.out);
  CHECK(doc.at("status") == "pass");
  bool saw_extension_check = false;
  for (const auto& check : doc.at("checks"))
    if (check.at("name") == "extension NOT orthogonal") {
      saw_extension_check = true;
      CHECK(check.at("status") == "pass");
    }
  CHECK(saw_extension_check);

  RunResult biop = run_cli("reproduce --example biop");
  CHECK(biop.exit_code == 0);
  CHECK(io::parse_text(biop.out).at("status") == "pass");

  CHECK(run_cli("reproduce --example nonsense").exit_code == 2);
}

TEST_CASE("fuzz runs a named suite and reproduces reports byte for byte") {
  RunResult r1 = run_cli("fuzz --suite coords-roundtrip --trials 10 --seed 5");
  RunResult r2 = run_cli("fuzz --suite coords-roundtrip --trials 10 --seed 5");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  io::json doc = io::parse_text(r1.out);
  CHECK(doc.at("status") == "pass");
  CHECK(doc.at("trials") == 10);
  CHECK(doc.at("seed") == 5);

  CHECK(run_cli("fuzz --suite no-such-suite --trials 2").exit_code == 2);
}

TEST_CASE("input errors exit with code 2") {
  fs::path dir = scratch_dir();
  fs::path garbled = dir / "garbled.json";
  {
    std::ofstream f(garbled);
    f << "{ not json";
  }
  CHECK(run_cli("check-form " + garbled.string()).exit_code == 2);

  fs::path missing = dir / "missing.json";
  fs::remove(missing);
  CHECK(run_cli("check-form " + missing.string()).exit_code == 2);

  // Non-involutive sigma.
  fs::path badspace = write_doc(
      dir, "badspace.json",
      io::json{{"space", {{"points", {"a", "b", "c"}},
                          {"sigma", {{"a", "b"}, {"b", "c"}, {"c", "a"}}}}},
               {"matrix", {{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}}});
  CHECK(run_cli("check-form " + badspace.string()).exit_code == 2);

  CHECK(run_cli("--tolerance 0.001 fuzz --trials 1").exit_code == 2);
}

TEST_CASE("float input is rationalized within the tolerance") {
  fs::path dir = scratch_dir();
  io::json doc{{"space", {{"points", {"a"}}, {"sigma", io::json::object()}}},
               {"matrix", {{0.5}}}};
  fs::path p = write_doc(dir, "float_form.json", doc);
  CHECK(run_cli("check-form " + p.string()).exit_code == 2);  // exact mode

  RunResult r = run_cli("--float-input decompose " + p.string());
  CHECK(r.exit_code == 0);
  io::json out = io::parse_text(r.out);
  // phi1 + phi2 evaluated on the unit recovers 1/2 exactly.
  Functional phi1 = io::functional_from_json(out.at("phi1"));
  Functional phi2 = io::functional_from_json(out.at("phi2"));
  CHECK(phi1.coeffs()[0] + phi2.coeffs()[0] == rat(1, 2));
}

TEST_CASE("space references resolve relative to the document path") {
  fs::path dir = scratch_dir();
  write_doc(dir, "ref_space.json",
            io::space_to_json(complexification_demo().space));
  io::json form;
  form["space"] = "ref_space.json";
  form["matrix"] = io::json::array(
      {io::json::array({"1", "0"}), io::json::array({"0", "1"})});
  fs::path p = write_doc(dir, "ref_form.json", form);
  CHECK(run_cli("check-form " + p.string()).exit_code == 0);
}
