#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "forge/algebroid.hpp"

#include "chart_fock_bridge.hpp"

using namespace forge;

namespace {

LaurentPoly pv(const RingPtr& r, std::size_t i, int e = 1) {
  return LaurentPoly::variable(r, i, e);
}
LaurentPoly pc(const RingPtr& r, const Rational& c) { return LaurentPoly::constant(r, c); }

void run_suite(const StructurePtr& s) {
  const AxiomReport rep = check_axioms(s, default_samples(s, 42));
  for (const auto& line : rep.lines) {
    CAPTURE(line.name);
    CAPTURE(line.detail);
    CHECK(line.pass);
  }
}

} // namespace

TEST_CASE("one-variable chart: frozen products") {
  const RingPtr R = make_ring({"x"});
  const StructurePtr cdo = make_cdo(R);
  const LaurentPoly x = pv(R, 0);
  const DiffForm zero1 = DiffForm::zero(R, 1);
  auto el = [&](const LaurentPoly& f, const DiffForm& w) {
    return make_element(cdo, {f}, {}, w);
  };
  auto dx_times = [&](const LaurentPoly& c) { return DiffForm::term(R, {0}, c); };

  const AlgebroidElement E = el(x * x, zero1); // x^2 . d/dx
  const AlgebroidElement F = el(x, zero1);     // x . d/dx

  CHECK(zero_product(E, F) == el(-(x * x), dx_times(pc(R, -4))));
  CHECK(zero_product(F, E) == el(x * x, zero1));
  CHECK(one_pairing(E, F) == x * pc(R, -4));
  CHECK(one_pairing(F, F) == pc(R, -1));

  // module action correction: x . (x . d/dx) picks up 2 dx
  const AlgebroidElement J = minus_one(x, F);
  CHECK(J == el(x * x, dx_times(pc(R, 2))));
  // J is the image of the standard weight-one current; its self-products:
  CHECK(zero_product(J, J) == el(LaurentPoly::zero(R), dx_times(x * pc(R, -4))));
  CHECK(one_pairing(J, J) == x * x * pc(R, -4));

  // closed formula for (f.tau) o0 (g.tau): (f g' - g f') . tau - (2 f'' g' + g f''') dx
  const LaurentPoly f = pv(R, 0, 3);            // x^3
  const LaurentPoly g = x * x + pc(R, 1);       // x^2 + 1
  const AlgebroidElement lhs = zero_product(el(f, zero1), el(g, zero1));
  const LaurentPoly vf_expect = -pv(R, 0, 4) - x * x * pc(R, 3);
  const LaurentPoly form_expect = -(x * x * pc(R, 30) + pc(R, 6));
  CHECK(lhs == el(vf_expect, dx_times(form_expect)));

  // d and the anchor
  CHECK(d_op(cdo, x * x) == el(LaurentPoly::zero(R), dx_times(x * pc(R, 2))));
  CHECK(anchor_apply(E, x) == x * x);
  CHECK(zero_product(E, d_op(cdo, x)) == d_op(cdo, x * x));
}

TEST_CASE("twisted three-variable chart: the 3-form enters frame products") {
  const RingPtr R = make_ring({"x", "y", "z"});
  const LaurentPoly x = pv(R, 0);
  const DiffForm alpha = DiffForm::term(R, {0, 1, 2}, x); // x dx^dy^dz
  const StructurePtr tw = make_cdo(R, alpha);

  const AlgebroidElement ty = frame_element(tw, 1);
  const AlgebroidElement tz = frame_element(tw, 2);
  const AlgebroidElement p = zero_product(ty, tz);
  CHECK(p.vf == std::vector<LaurentPoly>{LaurentPoly::zero(R), LaurentPoly::zero(R),
                                         LaurentPoly::zero(R)});
  CHECK(p.form == DiffForm::term(R, {0}, x)); // iota_z iota_y (x dx^dy^dz) = x dx
  CHECK(one_pairing(ty, tz).is_zero());

  // the twist must be closed
  const DiffForm bad = DiffForm::term(R, {0, 1, 2}, x * x); // d != 0 in 3 vars? no:
  // in three variables every 3-form is closed; use a genuinely non-closed one
  // on a 4-variable ring instead.
  (void)bad;
  const RingPtr R4 = make_ring({"x", "y", "z", "w"});
  CHECK_THROWS_AS((void)make_cdo(R4, DiffForm::term(R4, {0, 1, 2}, pv(R4, 3))),
                  std::domain_error);
}

TEST_CASE("kernel algebra products and validation") {
  const RingPtr R = make_ring({"u", "v"});
  // Courant chart with an sl2 kernel at pairing level 5, flat and fluxless
  std::vector<DiffForm> curv(3, DiffForm::zero(R, 2));
  const StructurePtr q = make_QNH(R, KernelAlgebra::sl2(Rational(5)), curv,
                                  DiffForm::zero(R, 3));
  const AlgebroidElement ge = kernel_element(q, 0);
  const AlgebroidElement gh = kernel_element(q, 1);
  const AlgebroidElement gf = kernel_element(q, 2);

  CHECK(zero_product(ge, gf) == gh);
  CHECK(zero_product(gh, ge) == scale(Rational(2), ge));
  CHECK(zero_product(gh, gf) == scale(Rational(-2), gf));
  CHECK(one_pairing(ge, gf) == pc(R, 5));
  CHECK(one_pairing(gh, gh) == pc(R, 10));
  CHECK(one_pairing(ge, ge).is_zero());
  CHECK(anchor(ge).is_zero());

  // compatibility gate: curvature whose pairing square is a nonzero 4-form
  // cannot ride with zero flux
  const RingPtr R4 = make_ring({"u1", "u2", "u3", "u4"});
  KernelAlgebra kz = KernelAlgebra::sl2_plus_center(Rational(1), Rational(1));
  std::vector<DiffForm> curv4(4, DiffForm::zero(R4, 2));
  curv4[3] = DiffForm::term(R4, {0, 1}, pc(R4, 1)) + DiffForm::term(R4, {2, 3}, pc(R4, 1));
  CHECK_THROWS_WITH_AS((void)make_QNH(R4, kz, curv4, DiffForm::zero(R4, 3)),
                       doctest::Contains("pontryagin mismatch"), std::domain_error);

  // frames must commute
  AlgebroidStructure bad;
  bad.ring = R;
  bad.kind = AlgebroidKind::Courant;
  bad.frame = {VectorField::coordinate(R, 0),
               VectorField::coordinate(R, 0).scaled(pv(R, 0))};
  bad.kernel = KernelAlgebra::trivial();
  bad.alpha = DiffForm::zero(R, 3);
  CHECK_THROWS_AS((void)make_structure(bad), std::invalid_argument);
}

TEST_CASE("curved kernel: frame-kernel products follow the curvature") {
  // rank-1 abelian kernel with curvature du^dv and pairing <lam,lam> = 3
  const RingPtr R = make_ring({"u", "v"});
  const DiffForm duv = DiffForm::term(R, {0, 1}, pc(R, 1));
  const StructurePtr s =
      make_tcdo_chart(R, {duv}, {{Rational(3)}}, DiffForm::zero(R, 3));

  const AlgebroidElement tu = frame_element(s, 0);
  const AlgebroidElement tv = frame_element(s, 1);
  const AlgebroidElement lam = kernel_element(s, 0);

  // tau_u o0 tau_v = (iota_u iota_v c) . lam = lam
  CHECK(zero_product(tu, tv) == lam);
  // tau_u o0 lam = -K_{11} iota_u (du^dv) = -3 dv
  CHECK(zero_product(tu, lam) ==
        form_element(s, DiffForm::term(R, {1}, pc(R, -3))));
  // lam o0 tau_u mirrors with the opposite sign
  CHECK(zero_product(lam, tu) ==
        form_element(s, DiffForm::term(R, {1}, pc(R, 3))));
  CHECK(one_pairing(lam, lam) == pc(R, 3));
  CHECK(one_pairing(tu, lam).is_zero());
}

TEST_CASE("axiom suites pass on every chart flavour") {
  SUBCASE("standard one-variable chart") { run_suite(make_cdo(make_ring({"x"}))); }
  SUBCASE("standard chart on a localized ring") {
    run_suite(make_cdo(make_ring({"x", "y"}, {"x"})));
  }
  SUBCASE("twisted three-variable chart") {
    const RingPtr R = make_ring({"x", "y", "z"});
    run_suite(make_cdo(R, DiffForm::term(R, {0, 1, 2}, pv(R, 0))));
  }
  SUBCASE("flat sl2 Courant chart") {
    const RingPtr R = make_ring({"u", "v"});
    run_suite(make_QNH(R, KernelAlgebra::sl2(Rational(1)),
                       std::vector<DiffForm>(3, DiffForm::zero(R, 2)),
                       DiffForm::zero(R, 3)));
  }
  SUBCASE("curved central-kernel Courant chart") {
    const RingPtr R = make_ring({"u1", "u2", "u3", "u4"});
    std::vector<DiffForm> curv(4, DiffForm::zero(R, 2));
    curv[3] = DiffForm::term(R, {0, 1}, pc(R, 1)) + DiffForm::term(R, {2, 3}, pc(R, 1));
    const DiffForm H = DiffForm::term(R, {1, 2, 3}, pv(R, 0));
    run_suite(make_QNH(R, KernelAlgebra::sl2_plus_center(Rational(1), Rational(1)),
                       curv, H));
  }
  SUBCASE("Lie flavour with abelian kernel") {
    const RingPtr R = make_ring({"u", "v"});
    run_suite(make_ttw_chart(R, {DiffForm::term(R, {0, 1}, pc(R, 1))}));
  }
  SUBCASE("vertex flavour with curved abelian kernel") {
    const RingPtr R = make_ring({"u", "v"});
    run_suite(make_tcdo_chart(R, {DiffForm::term(R, {0, 1}, pc(R, 1))},
                              {{Rational(0)}}, DiffForm::zero(R, 3)));
  }
}

TEST_CASE("chart products agree with the mode engine on a one-variable chart") {
  using forge::testing::bridge_element;
  using forge::testing::poly_state;

  const RingPtr R = make_ring({"x"});
  const Rational k(3);
  const StructurePtr s =
      make_tcdo_chart(R, {DiffForm::zero(R, 2)}, {{k}}, DiffForm::zero(R, 3));
  const FockEngine eng(k, 4);

  const LaurentPoly x = pv(R, 0);
  const std::vector<AlgebroidElement> elems = {
      make_element(s, {x * x}, {LaurentPoly::zero(R)}, DiffForm::term(R, {0}, pc(R, 1))),
      make_element(s, {x}, {x * x}, DiffForm::zero(R, 1)),
      make_element(s, {LaurentPoly::zero(R)}, {pc(R, 1)}, DiffForm::term(R, {0}, x)),
      d_op(s, pv(R, 0, 3)),
  };
  const std::vector<LaurentPoly> funcs = {x * x * x + x * pc(R, 2), x * x};

  for (const auto& a : elems)
    for (const auto& b : elems) {
      CAPTURE(a.str_repr());
      CAPTURE(b.str_repr());
      // 0-product and 1-pairing route identically through both engines
      CHECK(bridge_element(eng, zero_product(a, b)) ==
            eng.nth_product(bridge_element(eng, a), bridge_element(eng, b), 0));
      CHECK(poly_state(eng, one_pairing(a, b)) ==
            eng.nth_product(bridge_element(eng, a), bridge_element(eng, b), 1));
    }

  for (const auto& f : funcs)
    for (const auto& e : elems) {
      CAPTURE(to_string(f.constant_value()));
      // f . e = e_(-1) f - T(anchor(e) f)
      CHECK(bridge_element(eng, minus_one(f, e)) ==
            eng.nth_product(bridge_element(eng, e), poly_state(eng, f), -1) -
                eng.translate(poly_state(eng, anchor_apply(e, f))));
      CHECK(bridge_element(eng, d_op(s, f)) == eng.translate(poly_state(eng, f)));
    }
}
