#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "orthoform/genfuzz.hpp"
#include "orthoform/json_io.hpp"
#include "orthoform/reproduce.hpp"

namespace {

namespace fs = std::filesystem;
using orthoform::io::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;

struct Ctx {
  orthoform::io::FloatPolicy policy;
};

void print(const json& doc) { std::cout << orthoform::io::emit(doc); }

int cmd_check_form(const Ctx& ctx, const fs::path& path) {
  orthoform::BilinearForm v = orthoform::io::form_from_json(
      orthoform::io::parse_file(path), path.parent_path(), ctx.policy);
  bool orthogonal = orthoform::is_orthogonal_form(v);
  auto cex = orthoform::orthogonality_oracle(v, 200, 0x0f0f);
  json out{{"command", "check-form"},
           {"orthogonal", orthogonal},
           {"oracle_agrees", orthogonal == !cex.has_value()},
           {"counterexample", nullptr}};
  if (cex)
    out["counterexample"] = json{{"x", orthoform::io::element_to_json(cex->first)},
                                 {"y", orthoform::io::element_to_json(cex->second)}};
  print(out);
  return orthogonal ? kExitTrue : kExitFalse;
}

int cmd_decompose(const Ctx& ctx, const fs::path& path, const std::string& out_file) {
  orthoform::BilinearForm v = orthoform::io::form_from_json(
      orthoform::io::parse_file(path), path.parent_path(), ctx.policy);
  json out{{"command", "decompose"}};
  try {
    orthoform::FormDecomposition d = orthoform::decompose(v);
    out["phi1"] = orthoform::io::functional_to_json(d.phi1);
    out["phi2"] = orthoform::io::functional_to_json(d.phi2);
    out["verified"] = true;
  } catch (const orthoform::NotOrthogonal& e) {
    out["error"] = e.what();
    out["witness_basis"] = json::array({e.witness_basis.first,
                                        e.witness_basis.second});
    print(out);
    return kExitFalse;
  }
  print(out);
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) {
      std::cerr << "cannot write '" << out_file << "'\n";
      return kExitInput;
    }
    f << orthoform::io::emit(out);
  }
  return kExitTrue;
}

int cmd_complexify(const Ctx& ctx, const fs::path& path) {
  orthoform::BilinearForm v = orthoform::io::form_from_json(
      orthoform::io::parse_file(path), path.parent_path(), ctx.policy);
  orthoform::ComplexForm w = orthoform::complexify_form(v);
  bool ext = orthoform::is_extension_orthogonal(w);
  bool elim = orthoform::phi2_eliminable(v);
  print(json{{"command", "complexify"},
             {"extension_orthogonal", ext},
             {"phi2_eliminable", elim},
             {"agrees", ext == elim},
             {"matrix", orthoform::io::complexform_to_json(w)["matrix"]}});
  return ext ? kExitTrue : kExitFalse;
}

int cmd_analyze_map(const Ctx& ctx, const fs::path& path) {
  orthoform::LinearMap t = orthoform::io::map_from_json(
      orthoform::io::parse_file(path), path.parent_path(), ctx.policy);
  try {
    orthoform::PreserverStructure s = orthoform::analyze(t);
    json out = orthoform::io::structure_to_json(s);
    out["command"] = "analyze-map";
    print(out);
    return kExitTrue;
  } catch (const orthoform::NotOrthogonalityPreserving& e) {
    print(json{{"command", "analyze-map"},
               {"error", e.what()},
               {"witness_basis",
                json::array({e.witness_basis.first, e.witness_basis.second})}});
    return kExitFalse;
  }
}

int cmd_check_biop(const Ctx& ctx, const fs::path& path) {
  orthoform::LinearMap t = orthoform::io::map_from_json(
      orthoform::io::parse_file(path), path.parent_path(), ctx.policy);
  orthoform::BiopDecision d = orthoform::is_biorthogonality_preserving(t);
  json out{{"command", "check-biop"}, {"biop", d.ok}};
  if (d.ok)
    out["certificate"] = orthoform::io::certificate_to_json(*d.certificate);
  else
    out["reason"] = d.reason;
  print(out);
  return d.ok ? kExitTrue : kExitFalse;
}

json check_entry(const std::string& name, bool ok, const std::string& detail = "") {
  json j{{"name", name}, {"status", ok ? "pass" : "fail"}};
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

int cmd_reproduce(const std::string& example) {
  json checks = json::array();
  bool all = true;
  auto push = [&](const std::string& name, bool ok, const std::string& detail = "") {
    checks.push_back(check_entry(name, ok, detail));
    all = all && ok;
  };

  if (example == "complexification") {
    orthoform::ComplexificationDemo demo = orthoform::complexification_demo();
    const orthoform::FiniteSpace& sp = demo.space;

    push("real form orthogonal", orthoform::is_orthogonal_form(demo.form));
    push("oracle finds no counterexample",
         !orthoform::orthogonality_oracle(demo.form, 200, 7).has_value());

    orthoform::FormDecomposition d = orthoform::decompose(demo.form);
    orthoform::Functional re_delta_t1(sp, {orthoform::Rat(1), orthoform::Rat(0)});
    push("decomposition equivalent to (0, Re delta_t1)",
         orthoform::representation_equivalent(
             {d.phi1, d.phi2},
             {orthoform::Functional::zero(sp), re_delta_t1}));

    orthoform::ComplexForm w = orthoform::complexify_form(demo.form);
    const orthoform::CRat& value = w.at(sp.index("t1"), sp.index("t2"));
    push("extension nonzero on (chi_t1, chi_t2)", !value.is_zero(),
         "value = " + orthoform::crat_str(value));
    push("extension NOT orthogonal", !orthoform::is_extension_orthogonal(w));
    push("no representation with phi2 = 0", !orthoform::phi2_eliminable(demo.form));
  } else if (example == "biop") {
    orthoform::BiopDemo demo = orthoform::biop_demo();
    const orthoform::LinearMap& t = demo.map;

    push("map is a linear bijection",
         t.matrix().rank() == demo.domain.dim() &&
             demo.domain.dim() == demo.codomain.dim());
    push("map preserves orthogonality", orthoform::is_orthogonality_preserving(t));

    orthoform::PreserverStructure s = orthoform::analyze(t);
    auto expect = [&](const char* cod, const char* dom, orthoform::CRat a1,
                      orthoform::CRat a2) {
      int p = demo.codomain.index(cod);
      return s.phi[p] == demo.domain.index(dom) && s.a1[p] == a1 && s.a2[p] == a2;
    };
    using orthoform::CRat;
    using orthoform::Rat;
    bool structure_ok = expect("s1", "t1", CRat(Rat(1)), CRat::unit_i()) &&
                        expect("s2", "t2", CRat(Rat(1)), CRat()) &&
                        expect("s3", "t3", CRat(Rat(1)), CRat()) &&
                        expect("s4", "t3", CRat(), CRat(Rat(1)));
    push("support map and weights as expected", structure_ok);

    orthoform::BiopDecision d = orthoform::is_biorthogonality_preserving(t);
    push("NOT bi-orthogonality preserving", !d.ok, d.reason);

    orthoform::LinearMap back(demo.codomain, demo.domain,
                              *t.matrix().inverse());
    push("inverse does not preserve orthogonality",
         orthoform::op_violation_witness(back).has_value());
    push("inverse still preserves invertible elements",
         orthoform::inverse_preserves_invertibles_check(t));
    push("spaces admit no bi-orthogonality preserver",
         !orthoform::spaces_admit_biop(demo.domain, demo.codomain).ok);
  } else {
    std::cerr << "unknown example '" << example
              << "' (expected: complexification, biop)\n";
    return kExitInput;
  }

  print(json{{"command", "reproduce"},
             {"example", example},
             {"checks", checks},
             {"status", all ? "pass" : "fail"}});
  return all ? kExitTrue : kExitFalse;
}

int cmd_fuzz(const std::string& suite, const orthoform::GenConfig& cfg) {
  if (suite == "all") {
    json reports = json::array();
    bool all = true;
    for (const std::string& name : orthoform::suite_names()) {
      orthoform::SuiteReport r = orthoform::run_suite(name, cfg);
      all = all && r.pass;
      reports.push_back(orthoform::report_to_json(r));
    }
    print(reports);
    return all ? kExitTrue : kExitFalse;
  }
  orthoform::SuiteReport r = orthoform::run_suite(suite, cfg);
  print(orthoform::report_to_json(r));
  return r.pass ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of orthogonal forms and orthogonality "
               "preservers on finite real function algebras"};
  app.require_subcommand(1);

  bool float_input = false;
  double tolerance = 1e-9;
  app.add_flag("--float-input", float_input,
               "accept JSON numbers, rationalized by continued fractions");
  CLI::Option* tol_opt =
      app.add_option("--tolerance", tolerance,
                     "rationalization tolerance (requires --float-input)");

  std::string form_path, map_path, out_file, example;
  std::string suite = "all";
  orthoform::GenConfig cfg;
  cfg.trials = 100;

  CLI::App* c_check = app.add_subcommand("check-form",
                                         "decide orthogonality of a form");
  c_check->add_option("form", form_path, "form document")->required();

  CLI::App* c_dec = app.add_subcommand(
      "decompose", "decompose an orthogonal form into two functionals");
  c_dec->add_option("form", form_path, "form document")->required();
  c_dec->add_option("--out", out_file, "also write the result to a file");

  CLI::App* c_cpx = app.add_subcommand(
      "complexify", "complex-bilinear extension and its orthogonality");
  c_cpx->add_option("form", form_path, "form document")->required();

  CLI::App* c_ana = app.add_subcommand(
      "analyze-map", "support map and weights of an orthogonality preserver");
  c_ana->add_option("map", map_path, "map document")->required();

  CLI::App* c_biop = app.add_subcommand(
      "check-biop", "decide bi-orthogonality preservation with a certificate");
  c_biop->add_option("map", map_path, "map document")->required();

  CLI::App* c_rep = app.add_subcommand("reproduce", "run a bundled example");
  c_rep->add_option("--example", example, "complexification | biop")->required();

  CLI::App* c_fuzz = app.add_subcommand("fuzz", "run a property suite");
  c_fuzz->add_option("--suite", suite, "suite name or 'all'");
  c_fuzz->add_option("--trials", cfg.trials, "trials per suite");
  c_fuzz->add_option("--seed", cfg.seed, "master seed");
  c_fuzz->add_option("--max-f", cfg.max_fixed, "max fixed points");
  c_fuzz->add_option("--max-cycles", cfg.max_cycles, "max 2-cycles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (tol_opt->count() > 0 && !float_input) {
    std::cerr << "--tolerance is only meaningful with --float-input\n";
    return kExitInput;
  }
  Ctx ctx{{float_input, tolerance}};

  try {
    if (*c_check) return cmd_check_form(ctx, form_path);
    if (*c_dec) return cmd_decompose(ctx, form_path, out_file);
    if (*c_cpx) return cmd_complexify(ctx, form_path);
    if (*c_ana) return cmd_analyze_map(ctx, map_path);
    if (*c_biop) return cmd_check_biop(ctx, map_path);
    if (*c_rep) return cmd_reproduce(example);
    if (*c_fuzz) return cmd_fuzz(suite, cfg);
  } catch (const orthoform::UnknownSuite& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const orthoform::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const orthoform::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
