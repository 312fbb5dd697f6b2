#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "forge/reports.hpp"

using namespace forge;

namespace {

const std::string kRoot = std::string(FORGE_SOURCE_DIR);

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Json p1_echo(const std::string& k) {
  return Json{{"name", "p1-demo"}, {"k", k},        {"check", "all"},
              {"seed", 0},         {"degree_bound", 6}};
}

} // namespace

TEST_CASE("p1 demo reports match the golden files byte for byte") {
  const RunOptions opt;
  for (const std::string k : {"0", "2", "4"}) {
    CAPTURE(k);
    const Json rep = p1_demo_report(parse_rational(k), "all", p1_echo(k), opt);
    CHECK(rep.dump(2) + "\n" == slurp(kRoot + "/tests/golden/p1_demo_k" + k + ".json"));
  }
}

TEST_CASE("verify reports carry the chart verdict") {
  const RunOptions opt;
  const Json good = verify_report(
      load_structure(kRoot + "/fixtures/chart_vertex_cdo.json"),
      Json{{"name", "verify"}}, opt);
  CHECK(report_pass(good));
  CHECK(good.at("sections")[0].at("name") == "vertex-axioms");
  CHECK(good.at("sections")[0].at("kind") == "vertex");

  const Json bad = verify_report(
      load_structure(kRoot + "/fixtures/chart_courant_badK.json"),
      Json{{"name", "verify"}}, opt);
  CHECK_FALSE(report_pass(bad));
  bool named_axiom_failed = false;
  for (const Json& l : bad.at("sections")[0].at("report").at("lines"))
    if (!l.at("pass").get<bool>() && !l.at("name").get<std::string>().empty())
      named_axiom_failed = true;
  CHECK(named_axiom_failed);

  CHECK_FALSE(report_pass(verify_report(
      load_structure(kRoot + "/fixtures/chart_courant_wrongflux.json"),
      Json{{"name", "verify"}}, opt)));
}

TEST_CASE("arith reports: round trips, emission invariant, bad inputs") {
  const RunOptions opt;
  const StructurePtr q = load_structure(kRoot + "/fixtures/chart_courant.json");
  const StructurePtr d = load_structure(kRoot + "/fixtures/chart_cdo_4var.json");

  const ArithOutcome rt = arith_report("roundtrip", q, d, nullptr,
                                       Json{{"name", "arith"}}, opt);
  CHECK(report_pass(rt.report));
  CHECK(*rt.result == *q);

  const ArithOutcome plus = arith_report("boxplus", q, d, nullptr,
                                         Json{{"name", "arith"}}, opt);
  CHECK(report_pass(plus.report));
  CHECK(plus.result->kind == AlgebroidKind::Vertex);

  // The vertex-side round trip through the same D.
  const ArithOutcome rt2 = arith_report("roundtrip", plus.result, d, nullptr,
                                        Json{{"name", "arith"}}, opt);
  CHECK(report_pass(rt2.report));
  CHECK(*rt2.result == *plus.result);

  const DiffForm bad = DiffForm::term(
      q->ring, {0, 1, 2}, LaurentPoly::variable(q->ring, 3, 1)); // w dx^dy^dz
  CHECK_THROWS_AS(
      (void)arith_report("twist", q, nullptr, &bad, Json{{"name", "arith"}}, opt),
      std::domain_error);
  CHECK_THROWS_AS(
      (void)arith_report("boxtimes", q, d, nullptr, Json{{"name", "arith"}}, opt),
      std::invalid_argument);
  const StructurePtr d3 = load_structure(kRoot + "/fixtures/chart_vertex_cdo.json");
  CHECK_THROWS_AS(
      (void)arith_report("boxplus", q, d3, nullptr, Json{{"name", "arith"}}, opt),
      std::invalid_argument);
}

TEST_CASE("cech reports cover both flavours and the scope boundary") {
  const RunOptions opt;
  const Json full = cech_report(load_cover(kRoot + "/fixtures/cover_sl2z.json"),
                                Json{{"name", "cech"}}, opt);
  CHECK(report_pass(full));
  std::vector<std::string> names;
  for (const Json& s : full.at("sections"))
    names.push_back(s.at("name").get<std::string>());
  CHECK(names == std::vector<std::string>{
                     "courant-gluing", "courant-cocycle", "courant-theta-triples",
                     "cdo-gluing", "cdo-cocycle", "cdo-theta-triples",
                     "vext-cocycle", "coboundary"});
  CHECK(full.at("sections").back().at("result").at("trivialized").get<bool>());

  CHECK(report_pass(cech_report(load_cover(kRoot + "/fixtures/cover_abelian.json"),
                                Json{{"name", "cech"}}, opt)));
  CHECK(report_pass(cech_report(load_cover(kRoot + "/fixtures/cover_cdo.json"),
                                Json{{"name", "cech"}}, opt)));

  CHECK_THROWS_WITH_AS(
      (void)cech_report(load_cover(kRoot + "/fixtures/cover_p1_flip.json"),
                        Json{{"name", "cech"}}, opt),
      doctest::Contains("p1-demo"), std::invalid_argument);
}

TEST_CASE("wick reports: level, grid, and state echo") {
  const RunOptions opt;
  const Json rep = wick_report(Rational(3), "all", "a(-1)b(0)^2|0> - 1/2*lam(-1)|0>",
                               Json{{"name", "wick"}}, opt);
  CHECK(report_pass(rep));
  std::map<std::string, Json> secs;
  for (const Json& s : rep.at("sections")) secs[s.at("name").get<std::string>()] = s;
  CHECK(secs.at("sl2").at("kappa") == "-1/2");
  CHECK(secs.at("state").at("state") == "a(-1)b(0)^2|0> - 1/2*lam(-1)|0>");
  CHECK(secs.count("borcherds") == 1);

  const Json crit = wick_report(Rational(0), "sugawara", "", Json{{"name", "wick"}}, opt);
  CHECK(report_pass(crit));
  CHECK(crit.at("sections")[0].at("state") == "-lam(-2)|0> + 1/2*lam(-1)^2|0>");

  CHECK_THROWS_AS((void)wick_report(Rational(0), "ope", "", Json{}, opt),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)wick_report(Rational(0), "state", "", Json{}, opt),
                  std::invalid_argument);
}

TEST_CASE("human rendering derives from the same json") {
  const RunOptions opt;
  const Json rep = wick_report(Rational(2), "sl2", "", Json{{"name", "wick"}, {"k", "2"}}, opt);
  const std::string table = run_report_table(rep);
  CHECK(table.find("== wick  k=2\n") == 0);
  CHECK(table.find("-- sl2\n") != std::string::npos);
  CHECK(table.find("kappa: -1") != std::string::npos);
  CHECK(table.rfind("overall: PASS\n") == table.size() - 14);
}
