// algebroid-forge: command-line front end for the chart/cover pipelines.
//
// Subcommands: verify, arith, cech, p1-demo, wick.  Exit codes: 0 all checks
// pass, 1 a check failed, 2 input error (unparseable file, incompatible
// operands, bad flags).  Reports are deterministic for fixed inputs and seed:
// --json prints sorted-key JSON, the default prints an aligned table derived
// from the same data.  Wall-clock timing goes to stderr only, so report bytes
// never depend on the machine.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "forge/reports.hpp"

namespace {

using namespace forge;

// Bare file names (no directory separator) that do not exist in the working
// directory fall back to the fixture corpus shipped with the sources.
std::string resolve_input(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  if (path.find('/') == std::string::npos) {
    const std::string shipped = std::string(FORGE_SOURCE_DIR) + "/fixtures/" + path;
    if (fs::exists(shipped)) return shipped;
  }
  return path; // let the loader produce the "cannot open" error
}

int emit(const Json& report, bool json) {
  if (json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << run_report_table(report);
  return report_pass(report) ? 0 : 1;
}

struct CommonFlags {
  std::uint64_t seed = 0;
  int degree_bound = 6;
  bool json = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "sample seed for the axiom suites")
        ->envname("ALGEBROID_FORGE_SEED")
        ->capture_default_str();
    cmd->add_option("--degree-bound", degree_bound,
                    "Laurent degree window for bounded searches")
        ->capture_default_str();
    cmd->add_flag("--json", json, "machine-readable report on stdout");
  }
  RunOptions options() const { return RunOptions{seed, degree_bound}; }
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chart/cover toolkit for vertex and Courant algebroids"};
  app.require_subcommand(1);

  // verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "run the axiom suite a chart file claims to satisfy");
  std::string verify_chart, verify_kind;
  CommonFlags verify_flags;
  verify->add_option("--chart", verify_chart, "chart file (JSON)")->required();
  verify->add_option("--kind", verify_kind,
                     "assert the chart flavour: vertex|courant|lie");
  verify_flags.attach(verify);

  // arith ----------------------------------------------------------------
  auto* arith = app.add_subcommand(
      "arith", "Baer arithmetic: twist, boxplus, boxminus, roundtrip");
  std::string arith_op, arith_chart, arith_chart2, arith_form, arith_out;
  CommonFlags arith_flags;
  arith->add_option("--op", arith_op, "twist|boxplus|boxminus|roundtrip")->required();
  arith->add_option("--chart", arith_chart, "first operand chart file")->required();
  arith->add_option("--chart2", arith_chart2,
                    "second operand (kernel-free vertex chart file)");
  arith->add_option("--form", arith_form,
                    "closed 3-form for --op twist, in the form grammar");
  arith->add_option("--out", arith_out, "write the result chart to this file");
  arith_flags.attach(arith);

  // cech -----------------------------------------------------------------
  auto* cech = app.add_subcommand(
      "cech", "gluing checks, obstruction cocycles, and coboundary search");
  std::string cech_cover;
  CommonFlags cech_flags;
  cech->add_option("--cover", cech_cover, "cover file (JSON)")->required();
  cech_flags.attach(cech);

  // p1-demo ----------------------------------------------------------------
  auto* p1 = app.add_subcommand(
      "p1-demo", "two-chart projective-line family at deformation parameter k");
  std::string p1_k = "0", p1_check = "all";
  CommonFlags p1_flags;
  p1->add_option("--k", p1_k, "deformation parameter (rational)")
      ->capture_default_str();
  p1->add_option("--check", p1_check, "gluing|global|sl2|sugawara|all")
      ->capture_default_str();
  p1_flags.attach(p1);

  // wick -----------------------------------------------------------------
  auto* wick = app.add_subcommand(
      "wick", "free-field checks: affine sl2 table, Sugawara, Borcherds grid");
  std::string wick_k = "0", wick_check = "all", wick_state;
  CommonFlags wick_flags;
  wick->add_option("--k", wick_k, "Heisenberg pairing <lam,lam> (rational)")
      ->capture_default_str();
  wick->add_option("--check", wick_check, "sl2|sugawara|borcherds|state|all")
      ->capture_default_str();
  wick->add_option("--state", wick_state,
                   "state literal to echo in normal form, e.g. \"a(-1)b(0)|0>\"");
  wick_flags.attach(wick);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = 2;
  try {
    if (verify->parsed()) {
      const StructurePtr chart = load_structure(resolve_input(verify_chart));
      if (!verify_kind.empty()) {
        const std::string actual = structure_to_json(chart).at("kind").get<std::string>();
        if (actual != verify_kind)
          throw std::invalid_argument("chart is '" + actual + "', --kind asked for '" +
                                      verify_kind + "'");
      }
      const Json echo{{"name", "verify"}, {"chart", verify_chart},
                      {"seed", verify_flags.seed}};
      code = emit(verify_report(chart, echo, verify_flags.options()),
                  verify_flags.json);
    } else if (arith->parsed()) {
      const StructurePtr first = load_structure(resolve_input(arith_chart));
      StructurePtr second;
      if (!arith_chart2.empty())
        second = load_structure(resolve_input(arith_chart2));
      std::optional<DiffForm> gamma;
      if (!arith_form.empty()) gamma = parse_form(first->ring, 3, arith_form);
      Json echo{{"name", "arith"}, {"op", arith_op}, {"chart", arith_chart},
                {"seed", arith_flags.seed}};
      if (!arith_chart2.empty()) echo["chart2"] = arith_chart2;
      if (!arith_form.empty()) echo["form"] = arith_form;
      ArithOutcome out = arith_report(arith_op, first, second,
                                      gamma ? &*gamma : nullptr, echo,
                                      arith_flags.options());
      if (!arith_out.empty()) {
        save_structure(arith_out, out.result);
        std::cerr << "result chart written to " << arith_out << "\n";
      }
      code = emit(out.report, arith_flags.json);
    } else if (cech->parsed()) {
      const CoverFile cf = load_cover(resolve_input(cech_cover));
      const Json echo{{"name", "cech"}, {"cover", cech_cover},
                      {"degree_bound", cech_flags.degree_bound}};
      code = emit(cech_report(cf, echo, cech_flags.options()), cech_flags.json);
    } else if (p1->parsed()) {
      const Rational k = parse_rational(p1_k);
      const Json echo{{"name", "p1-demo"}, {"k", p1_k}, {"check", p1_check},
                      {"seed", p1_flags.seed},
                      {"degree_bound", p1_flags.degree_bound}};
      code = emit(p1_demo_report(k, p1_check, echo, p1_flags.options()),
                  p1_flags.json);
    } else if (wick->parsed()) {
      const Rational k = parse_rational(wick_k);
      Json echo{{"name", "wick"}, {"k", wick_k}, {"check", wick_check}};
      if (!wick_state.empty()) echo["state"] = wick_state;
      code = emit(wick_report(k, wick_check, wick_state, echo,
                              wick_flags.options()),
                  wick_flags.json);
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "elapsed: " << elapsed.count() << " ms\n";
  return code;
}
