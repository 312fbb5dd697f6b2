#include "forge/reports.hpp"

#include <functional>
#include <optional>
#include <sstream>

namespace forge {

namespace {

CheckLine mkline(std::string name, bool pass, std::string detail = "") {
  return CheckLine{std::move(name), pass, std::move(detail)};
}

Json section_json(const std::string& name, const AxiomReport& rep) {
  return Json{{"name", name}, {"report", report_to_json(rep)}};
}

Json finish(const Json& echo, std::vector<Json> sections) {
  bool pass = true;
  for (const Json& s : sections)
    if (s.contains("report") && !s.at("report").at("pass").get<bool>()) pass = false;
  return Json{{"command", echo}, {"pass", pass}, {"sections", Json(std::move(sections))}};
}

std::string kind_str(AlgebroidKind k) {
  switch (k) {
    case AlgebroidKind::Vertex: return "vertex";
    case AlgebroidKind::Courant: return "courant";
    case AlgebroidKind::Lie: return "lie";
  }
  return "?";
}

// Suite for the chart's own flavour, as one section.
Json axiom_section(const std::string& name, const StructurePtr& s,
                   const RunOptions& opt) {
  const SampleSet samples = default_samples(s, opt.seed);
  AxiomReport rep;
  switch (s->kind) {
    case AlgebroidKind::Vertex: rep = check_vertex_axioms(s, samples); break;
    case AlgebroidKind::Courant: rep = check_courant_axioms(s, samples); break;
    case AlgebroidKind::Lie: rep = check_lie_axioms(s, samples); break;
  }
  Json sec = section_json(name, rep);
  sec["kind"] = kind_str(s->kind);
  return sec;
}

// --- morphism utilities ------------------------------------------------------

bool same_images(const AlgebroidMorphism& a, const AlgebroidMorphism& b) {
  return *a.src == *b.src && *a.tgt == *b.tgt &&
         a.frame_images == b.frame_images && a.kernel_images == b.kernel_images;
}

AlgebroidMorphism restrict_morphism(const AlgebroidMorphism& m, const RingMorphism& r) {
  AlgebroidMorphism out;
  out.src = restrict_structure(m.src, r);
  out.tgt = restrict_structure(m.tgt, r);
  for (const AlgebroidElement& e : m.frame_images)
    out.frame_images.push_back(restrict_element(e, r, out.tgt));
  for (const AlgebroidElement& e : m.kernel_images)
    out.kernel_images.push_back(restrict_element(e, r, out.tgt));
  return out;
}

std::string key_str(const TripleKey& k) {
  return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
         std::to_string(k[2]) + ")";
}

// theta_ki . theta_jk . theta_ij on the triple ring, twists transported so the
// endpoints chain; a clean gluing composes to exp_beta of minus the beta form.
AxiomReport theta_triple_lines(
    const Cover& c, const GerbeCocycle& cc,
    const std::function<AlgebroidMorphism(std::size_t, std::size_t)>& trans) {
  AxiomReport rep;
  for (const auto& [key, tri] : c.triples) {
    const std::size_t i = key[0], j = key[1], k = key[2];
    const AlgebroidMorphism tij = restrict_morphism(trans(i, j), tri.from_01);
    const AlgebroidMorphism tjk = restrict_morphism(trans(j, k), tri.from_12);
    const AlgebroidMorphism tki = restrict_morphism(trans(k, i), tri.from_02);
    const DiffForm aij = tri.from_01.map(cc.alpha.at({i, j}));
    const DiffForm ajk = tri.from_12.map(cc.alpha.at({j, k}));
    const AlgebroidMorphism trip = compose(
        transport_twist(tki, aij + ajk), compose(transport_twist(tjk, aij), tij));
    const AlgebroidMorphism expect = exp_beta(tij.src, -cc.beta.at(key));
    rep.lines.push_back(mkline("theta-triple-" + key_str(key),
                               same_images(trip, expect)));
  }
  if (rep.lines.empty())
    rep.lines.push_back(mkline("theta-triple", true, "cover tracks no triples"));
  return rep;
}

// --- free-field helpers ------------------------------------------------------

AxiomReport sl2_field_lines(const Sl2FieldReport& r) {
  AxiomReport rep;
  for (const auto& l : r.lines) rep.lines.push_back(mkline(l.name, l.pass, l.detail));
  return rep;
}

Json sugawara_section(const Rational& k) {
  AxiomReport rep;
  Json sec;
  sec["name"] = "sugawara";
  if (k == 0) {
    const FockEngine eng(k, 2);
    const Sl2Triple t = wakimoto_sl2(eng);
    const FreeFieldState img = sugawara_image(eng, t);
    const FreeFieldState expect =
        eng.monomial({{FockGen::Lam, -1}, {FockGen::Lam, -1}}, Rational(1, 2)) -
        eng.translate(eng.monomial({{FockGen::Lam, -1}}));
    rep.lines.push_back(mkline("sugawara-image", img == expect, print_state(img)));
    sec["state"] = print_state(img);
  } else {
    rep.lines.push_back(mkline(
        "sugawara-critical-only", true,
        "image lies in the Heisenberg subspace only at k = 0; skipped at k = " +
            to_string(k)));
  }
  sec["report"] = report_to_json(rep);
  return sec;
}

// Weight <= 1 monomial basis with the b zero-mode truncated at linear order:
// the b(0) ladder is infinite, and the linear slice is the smallest one that
// exercises every commutator [a_m, b_k] the grid products can reach.
std::vector<FreeFieldState> weight_le1_basis(const FockEngine& eng) {
  using G = FockGen;
  return {eng.vacuum(),
          eng.monomial({{G::B, 0}}),
          eng.monomial({{G::A, -1}}),
          eng.monomial({{G::B, -1}}),
          eng.monomial({{G::Lam, -1}}),
          eng.monomial({{G::A, -1}, {G::B, 0}}),
          eng.monomial({{G::B, -1}, {G::B, 0}}),
          eng.monomial({{G::Lam, -1}, {G::B, 0}})};
}

// --- human rendering ---------------------------------------------------------

AxiomReport report_from_json(const Json& r) {
  AxiomReport rep;
  for (const Json& l : r.at("lines"))
    rep.lines.push_back(mkline(l.at("name").get<std::string>(),
                               l.at("pass").get<bool>(),
                               l.at("detail").get<std::string>()));
  return rep;
}

void render_payload(std::ostream& out, const std::string& key, const Json& v) {
  if (v.is_string())
    out << "  " << key << ": " << v.get<std::string>() << "\n";
  else
    out << "  " << key << ": " << v.dump() << "\n";
}

} // namespace

bool report_pass(const Json& report) { return report.at("pass").get<bool>(); }

std::string run_report_table(const Json& report) {
  std::ostringstream out;
  const Json& echo = report.at("command");
  out << "== " << echo.value("name", "run");
  for (const auto& [k, v] : echo.items()) {
    if (k == "name") continue;
    out << "  " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
  }
  out << "\n";
  for (const Json& sec : report.at("sections")) {
    out << "-- " << sec.at("name").get<std::string>() << "\n";
    out << report_table(report_from_json(sec.at("report")));
    for (const auto& [k, v] : sec.items())
      if (k != "name" && k != "report") render_payload(out, k, v);
  }
  out << "overall: " << (report_pass(report) ? "PASS" : "FAIL") << "\n";
  return out.str();
}

// --- verify ------------------------------------------------------------------

Json verify_report(const StructurePtr& chart, const Json& echo,
                   const RunOptions& opt) {
  return finish(echo, {axiom_section(kind_str(chart->kind) + "-axioms", chart, opt)});
}

// --- arith -------------------------------------------------------------------

ArithOutcome arith_report(const std::string& op, const StructurePtr& first,
                          const StructurePtr& second, const DiffForm* gamma,
                          const Json& echo, const RunOptions& opt) {
  if (!first) throw std::invalid_argument("arith: no input chart");
  AxiomReport oprep;
  StructurePtr result;
  if (op == "twist") {
    if (!gamma) throw std::invalid_argument("twist needs a 3-form (--form)");
    result = twist(first, *gamma);
    oprep.lines.push_back(
        mkline("twist-applied", true, "3-form slot shifted by the given closed form"));
  } else if (op == "boxplus" || op == "boxminus") {
    if (!second) throw std::invalid_argument(op + " needs a second chart (--chart2)");
    result = op == "boxplus" ? boxplus(first, second) : boxminus(first, second);
    oprep.lines.push_back(mkline(op, true, kind_str(result->kind) + " extension assembled"));
  } else if (op == "roundtrip") {
    if (!second) throw std::invalid_argument("roundtrip needs a second chart (--chart2)");
    StructurePtr mid;
    if (first->kind == AlgebroidKind::Courant) {
      mid = boxplus(first, second);
      result = boxminus(mid, second);
    } else if (first->kind == AlgebroidKind::Vertex) {
      mid = boxminus(first, second);
      result = boxplus(mid, second);
    } else {
      throw std::invalid_argument("roundtrip needs a Courant or vertex first operand");
    }
    oprep.lines.push_back(mkline("roundtrip-exact", *result == *first,
                                 "through a " + kind_str(mid->kind) + " intermediate"));
  } else {
    throw std::invalid_argument("unknown arith op '" + op +
                                "' (expected twist|boxplus|boxminus|roundtrip)");
  }

  AxiomReport emit;
  const Json doc = structure_to_json(result);
  emit.lines.push_back(mkline("serialization-roundtrip",
                              *structure_from_json(doc) == *result,
                              "emitted chart re-parses to the in-memory result"));
  Json emission = section_json("emission", emit);
  emission["chart"] = doc;

  ArithOutcome out;
  out.report = finish(echo, {section_json("arithmetic", oprep),
                             axiom_section("result-axioms", result, opt),
                             std::move(emission)});
  out.result = result;
  return out;
}

// --- cech --------------------------------------------------------------------

Json cech_report(const CoverFile& cf, const Json& echo, const RunOptions& opt) {
  if (cf.courant_charts.empty() && cf.cdo_charts.empty())
    throw std::invalid_argument(
        "cover file carries neither a Courant nor a CDO gluing section");
  std::vector<Json> sections;
  std::optional<GerbeCocycle> cq, cd;
  bool cocycles_ok = true;

  // The transition morphisms permute nothing, so the whole pipeline is scoped
  // to covers whose restricted frames agree on every overlap.  Coordinate
  // flips (the projective line) need a bespoke gluing morphism and live in
  // the p1-demo subcommand.
  const std::vector<StructurePtr>& frame_charts =
      cf.courant_charts.empty() ? cf.cdo_charts : cf.courant_charts;
  if (frame_charts.size() == cf.cover.size()) {
    for (const auto& [key, ov] : cf.cover.pairs) {
      const StructurePtr a = restrict_structure(frame_charts[key.first], ov.from_first);
      const StructurePtr b = restrict_structure(frame_charts[key.second], ov.from_second);
      if (!(a->frame == b->frame))
        throw std::invalid_argument(
            "overlap (" + std::to_string(key.first) + "," +
            std::to_string(key.second) +
            "): restricted frames differ; coordinate-flip covers such as the "
            "projective line are handled by the p1-demo subcommand, not cech");
    }
  }

  if (!cf.courant_charts.empty()) {
    CourantGluingData g{cf.courant_charts, cf.connection};
    const AxiomReport glue = check_courant_gluing(cf.cover, g);
    sections.push_back(section_json("courant-gluing", glue));
    if (glue.all_pass()) {
      cq = courant_gluing_cocycle(cf.cover, g);
      const AxiomReport cc = check_gerbe_cocycle(cf.cover, *cq);
      cocycles_ok = cocycles_ok && cc.all_pass();
      Json sec = section_json("courant-cocycle", cc);
      sec["cocycle"] = cocycle_to_json(*cq);
      sections.push_back(std::move(sec));
      sections.push_back(section_json(
          "courant-theta-triples",
          theta_triple_lines(cf.cover, *cq, [&](std::size_t i, std::size_t j) {
            return courant_transition(cf.cover, g, i, j);
          })));
    } else {
      cocycles_ok = false;
    }
  }

  if (!cf.cdo_charts.empty()) {
    CdoGluingData g{cf.cdo_charts, cf.gauge};
    const AxiomReport glue = check_cdo_gluing(cf.cover, g);
    sections.push_back(section_json("cdo-gluing", glue));
    if (glue.all_pass()) {
      cd = cdo_gluing_cocycle(cf.cover, g);
      const AxiomReport cc = check_gerbe_cocycle(cf.cover, *cd);
      cocycles_ok = cocycles_ok && cc.all_pass();
      Json sec = section_json("cdo-cocycle", cc);
      sec["cocycle"] = cocycle_to_json(*cd);
      sections.push_back(std::move(sec));
      sections.push_back(section_json(
          "cdo-theta-triples",
          theta_triple_lines(cf.cover, *cd, [&](std::size_t i, std::size_t j) {
            return cdo_transition(cf.cover, g, i, j);
          })));
    } else {
      cocycles_ok = false;
    }
  }

  std::optional<GerbeCocycle> target;
  if (cq && cd) {
    const GerbeCocycle vc = vertex_gluing_cocycle(
        cf.cover, CourantGluingData{cf.courant_charts, cf.connection},
        CdoGluingData{cf.cdo_charts, cf.gauge});
    AxiomReport rep = check_gerbe_cocycle(cf.cover, vc);
    const GerbeCocycle sum = add(*cq, *cd);
    rep.lines.push_back(mkline("sum-of-parts",
                               vc.alpha == sum.alpha && vc.beta == sum.beta,
                               "vertex cocycle equals Courant part plus CDO part"));
    cocycles_ok = cocycles_ok && rep.all_pass();
    Json sec = section_json("vext-cocycle", rep);
    sec["cocycle"] = cocycle_to_json(vc);
    sections.push_back(std::move(sec));
    target = vc;
  } else if (cq) {
    target = *cq;
  } else if (cd) {
    target = *cd;
  }

  if (target && cocycles_ok) {
    const CoboundaryResult res = coboundary_test(cf.cover, *target, opt.degree_bound);
    AxiomReport rep;
    rep.lines.push_back(mkline("bounded-search", true, res.note));
    Json sec = section_json("coboundary", rep);
    sec["result"] = coboundary_to_json(res);
    sec["window"] = opt.degree_bound;
    sections.push_back(std::move(sec));
  }

  return finish(echo, std::move(sections));
}

// --- p1 demo -----------------------------------------------------------------

Json p1_demo_report(const Rational& k, const std::string& check,
                    const Json& echo, const RunOptions& opt) {
  const bool all = check == "all";
  if (!all && check != "gluing" && check != "sl2" && check != "global" &&
      check != "sugawara")
    throw std::invalid_argument("unknown check '" + check +
                                "' (expected gluing|global|sl2|sugawara|all)");
  const P1Family fam = p1_deformed_family(k);
  std::vector<Json> sections;

  if (all || check == "gluing") {
    sections.push_back(section_json(
        "gluing-forward", check_morphism(fam.gluing, default_samples(fam.over1, opt.seed))));
    sections.push_back(section_json(
        "gluing-inverse",
        check_morphism(fam.gluing_inverse, default_samples(fam.over0, opt.seed + 1))));
    AxiomReport rt;
    rt.lines.push_back(mkline(
        "roundtrip-on-chart1",
        same_images(compose(fam.gluing_inverse, fam.gluing), identity_morphism(fam.over1))));
    rt.lines.push_back(mkline(
        "roundtrip-on-chart0",
        same_images(compose(fam.gluing, fam.gluing_inverse), identity_morphism(fam.over0))));
    sections.push_back(section_json("gluing-roundtrip", rt));
  }

  if (all || check == "sl2") {
    AxiomReport rep = check_p1_sl2(fam);
    const Rational level = p1_sl2_level(fam);
    rep.lines.push_back(mkline("level-formula", level == k / 2 - 2,
                               "kappa = " + to_string(level)));
    const FockEngine eng(k, 2);
    const Sl2FieldReport fr = check_affine_sl2(eng, wakimoto_sl2(eng));
    rep.lines.push_back(mkline("level-cross-check",
                               fr.all_pass() && fr.kappa == level,
                               "free-field kappa = " + to_string(fr.kappa)));
    Json sec = section_json("sl2", rep);
    sec["kappa"] = to_string(level);
    sections.push_back(std::move(sec));
  }

  if (all || check == "global") {
    const GlobalSections gs = p1_global_sections(fam, opt.degree_bound);
    AxiomReport rep;
    const std::size_t expected = k == 0 ? 4 : 3;
    rep.lines.push_back(mkline(
        "dimension", gs.dimension() == expected,
        "dim = " + std::to_string(gs.dimension()) + " within degree window 0.." +
            std::to_string(gs.degree_bound)));
    for (const CheckLine& l : check_p1_sl2(fam).lines)
      if (l.name.rfind("gluing-", 0) == 0)
        rep.lines.push_back(mkline("contains-sl2-" + l.name.substr(7), l.pass, l.detail));
    Json sec = section_json("global-sections", rep);
    sec["dimension"] = gs.dimension();
    Json basis = Json::array();
    for (const auto& [s0, s1] : gs.basis)
      basis.push_back(Json{{"chart0", s0.str_repr()}, {"chart1", s1.str_repr()}});
    sec["basis"] = std::move(basis);
    sections.push_back(std::move(sec));
  }

  if (all || check == "sugawara") sections.push_back(sugawara_section(k));

  return finish(echo, std::move(sections));
}

// --- wick --------------------------------------------------------------------

Json wick_report(const Rational& k, const std::string& check,
                 const std::string& state_literal, const Json& echo,
                 const RunOptions& opt) {
  (void)opt; // the free-field checks are exhaustive over fixed grids
  const bool all = check == "all";
  if (!all && check != "sl2" && check != "sugawara" && check != "borcherds" &&
      check != "state")
    throw std::invalid_argument("unknown check '" + check +
                                "' (expected sl2|sugawara|borcherds|state|all)");
  std::vector<Json> sections;

  if (!state_literal.empty() || check == "state") {
    if (state_literal.empty())
      throw std::invalid_argument("--check state needs a --state literal");
    const FreeFieldState st = parse_state(state_literal);
    AxiomReport rep;
    rep.lines.push_back(mkline("state-grammar", parse_state(print_state(st)) == st,
                               print_state(st)));
    Json sec = section_json("state", rep);
    sec["state"] = print_state(st);
    sections.push_back(std::move(sec));
  }

  if (all || check == "sl2") {
    const FockEngine eng(k, 2);
    const Sl2FieldReport fr = check_affine_sl2(eng, wakimoto_sl2(eng));
    AxiomReport rep = sl2_field_lines(fr);
    rep.lines.push_back(mkline("level-formula", fr.kappa == k / 2 - 2,
                               "kappa = " + to_string(fr.kappa)));
    Json sec = section_json("sl2", rep);
    sec["kappa"] = to_string(fr.kappa);
    sections.push_back(std::move(sec));
  }

  if (all || check == "sugawara") sections.push_back(sugawara_section(k));

  if (all || check == "borcherds") {
    const FockEngine eng(k, 8);
    const std::vector<FreeFieldState> basis = weight_le1_basis(eng);
    std::size_t count = 0;
    bool ok = true;
    std::string first_fail;
    for (std::size_t u = 0; u < basis.size() && ok; ++u)
      for (std::size_t v = 0; v < basis.size() && ok; ++v)
        for (std::size_t w = 0; w < basis.size() && ok; ++w)
          for (int m = -1; m <= 1 && ok; ++m)
            for (int n = -1; n <= 1 && ok; ++n)
              for (int p = -1; p <= 1 && ok; ++p) {
                ++count;
                if (!borcherds_identity(eng, basis[u], basis[v], basis[w], m, n, p)) {
                  ok = false;
                  first_fail = "u=" + print_state(basis[u]) +
                               ", v=" + print_state(basis[v]) +
                               ", w=" + print_state(basis[w]) + ", (m,n,k)=(" +
                               std::to_string(m) + "," + std::to_string(n) + "," +
                               std::to_string(p) + ")";
                }
              }
    AxiomReport rep;
    rep.lines.push_back(mkline(
        "borcherds-grid", ok,
        ok ? std::to_string(basis.size() * basis.size() * basis.size()) +
                 " state triples x 27 mode triples, " + std::to_string(count) +
                 " identities, all exact"
           : "first failure: " + first_fail));
    sections.push_back(section_json("borcherds", rep));
  }

  if (sections.empty())
    throw std::invalid_argument("nothing to do: pass --check or --state");
  return finish(echo, std::move(sections));
}

} // namespace forge
