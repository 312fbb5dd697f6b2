#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "forge/p1.hpp"
#include "forge/sampling.hpp"

using namespace forge;

namespace {

bool all_pass(const AxiomReport& rep) {
  for (const auto& l : rep.lines) {
    CAPTURE(l.name);
    CAPTURE(l.detail);
    CHECK(l.pass);
  }
  return rep.all_pass();
}

LaurentPoly xv(const RingPtr& r, int e = 1) { return LaurentPoly::variable(r, 0, e); }

} // namespace

TEST_CASE("chart family shape and restricted frames") {
  const P1Family fam = p1_deformed_family(Rational(2));
  CHECK(fam.cov.size() == 2);
  CHECK(fam.cov.pairs.size() == 1);
  CHECK(fam.has_kernel);
  CHECK(fam.chart0->kernel.dim() == 1);
  CHECK(fam.chart0->kernel.pairing[0][0] == Rational(2));

  // Chart 0 restricts to the coordinate frame, chart 1 to -x^2 d/dx.
  const RingPtr& rov = fam.cov.pair(0, 1).ring;
  CHECK(fam.over0->frame[0].component(0) == LaurentPoly::constant(rov, 1));
  CHECK(fam.over1->frame[0].component(0) == -(xv(rov) * xv(rov)));

  const P1Family plain = p1_cdo_family();
  CHECK_FALSE(plain.has_kernel);
  CHECK(plain.chart0->kernel.dim() == 0);
}

TEST_CASE("vertex axioms hold on the overlap restrictions") {
  // The overlap structures exercise the product engine away from coordinate
  // frames: over1's single frame field is -x^2 d/dx on the Laurent ring.
  const P1Family fam = p1_deformed_family(Rational(2));
  for (const StructurePtr& s : {fam.over0, fam.over1}) {
    SampleSet samples = default_samples(s, 31);
    samples.pair_budget = 160;
    samples.triple_budget = 110;
    CHECK(all_pass(check_vertex_axioms(s, samples)));
  }
  const P1Family plain = p1_cdo_family();
  SampleSet samples = default_samples(plain.over1, 32);
  samples.pair_budget = 160;
  samples.triple_budget = 110;
  CHECK(all_pass(check_vertex_axioms(plain.over1, samples)));
}

TEST_CASE("gluing morphisms pass the morphism checks") {
  for (const Rational& k : {Rational(0), Rational(2), Rational(7) / 3}) {
    const P1Family fam = p1_deformed_family(k);
    CAPTURE(k.str());
    CHECK(all_pass(check_morphism(fam.gluing, default_samples(fam.over1, 41))));
    CHECK(all_pass(
        check_morphism(fam.gluing_inverse, default_samples(fam.over0, 42))));
  }
  const P1Family plain = p1_cdo_family();
  CHECK(all_pass(check_morphism(plain.gluing, default_samples(plain.over1, 43))));
  CHECK(all_pass(
      check_morphism(plain.gluing_inverse, default_samples(plain.over0, 44))));
}

TEST_CASE("gluing and its inverse compose to the identities") {
  const P1Family fam = p1_deformed_family(Rational(4));
  const AlgebroidMorphism round0 = compose(fam.gluing, fam.gluing_inverse);
  const AlgebroidMorphism id0 = identity_morphism(fam.over0);
  REQUIRE(round0.frame_images.size() == 1);
  CHECK(round0.frame_images[0] == id0.frame_images[0]);
  CHECK(round0.kernel_images[0] == id0.kernel_images[0]);

  const AlgebroidMorphism round1 = compose(fam.gluing_inverse, fam.gluing);
  const AlgebroidMorphism id1 = identity_morphism(fam.over1);
  CHECK(round1.frame_images[0] == id1.frame_images[0]);
  CHECK(round1.kernel_images[0] == id1.kernel_images[0]);
}

TEST_CASE("frozen gluing images") {
  const Rational k(7, 3);
  const P1Family fam = p1_deformed_family(k);
  const RingPtr& rov = fam.cov.pair(0, 1).ring;

  const AlgebroidElement& fi = fam.gluing.frame_images[0];
  CHECK(fi.vf[0] == -(xv(rov) * xv(rov)));
  CHECK(fi.kr[0] == xv(rov));
  CHECK(fi.form ==
        DiffForm::term(rov, {0}, LaurentPoly::constant(rov, k / 2 - 4)));

  const AlgebroidElement& ki = fam.gluing.kernel_images[0];
  CHECK(ki.kr[0] == LaurentPoly::constant(rov, 1));
  CHECK(ki.vf[0].is_zero());
  CHECK(ki.form == DiffForm::term(rov, {0}, xv(rov, -1) * k));
}

TEST_CASE("sl2 embedding: relations, gluing, and the level") {
  for (const Rational& k :
       {Rational(0), Rational(2), Rational(4), Rational(7) / 3}) {
    const P1Family fam = p1_deformed_family(k);
    CAPTURE(k.str());
    CHECK(all_pass(check_p1_sl2(fam)));
    CHECK(p1_sl2_level(fam) == k / 2 - 2);
  }
  const P1Family plain = p1_cdo_family();
  CHECK(all_pass(check_p1_sl2(plain)));
  CHECK(p1_sl2_level(plain) == Rational(-2));
}

TEST_CASE("global sections: dimensions and distinguished members") {
  const P1Family fam = p1_deformed_family(Rational(2));
  const GlobalSections secs = p1_global_sections(fam);
  CHECK(secs.degree_bound == 4);
  CHECK(secs.dimension() == 3);

  // Each sl2 current is itself a global section (the gluing-e/h/f lines of
  // check_p1_sl2); with the space three-dimensional the triple is a basis.
  CHECK(all_pass(check_p1_sl2(fam)));

  // At k = 0 the kernel generator glues to itself, adding one dimension.
  const P1Family flat = p1_deformed_family(Rational(0));
  CHECK(p1_global_sections(flat).dimension() == 4);
  const Overlap& ov = flat.cov.pair(0, 1);
  const AlgebroidElement lam0 =
      restrict_element(kernel_element(flat.chart0, 0), ov.from_first, flat.over0);
  const AlgebroidElement lam1 = flat.gluing.apply(
      restrict_element(kernel_element(flat.chart1, 0), ov.from_second, flat.over1));
  CHECK(lam0 == lam1);

  const P1Family plain = p1_cdo_family();
  CHECK(p1_global_sections(plain).dimension() == 3);
}

TEST_CASE("global sections: ansatz window honesty") {
  const P1Family fam = p1_deformed_family(Rational(2));
  // Degree 0 misses the whole triple (the chart-1 coefficients of e are
  // quadratic), and degree 2 finds it, so the bound-0 run must refuse.
  CHECK_THROWS_AS(p1_global_sections(fam, 0), AnsatzTooSmall);
  CHECK(p1_global_sections(fam, 2).dimension() == 3);
  CHECK_THROWS_AS(p1_global_sections(fam, -1), std::invalid_argument);
}
