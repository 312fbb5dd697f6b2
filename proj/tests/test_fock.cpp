#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "forge/fock.hpp"

#include <vector>

using namespace forge;
using G = FockGen;

TEST_CASE("mode commutators and vacuum annihilation") {
  FockEngine eng(Rational(5), 4);
  const auto vac = eng.vacuum();

  // a_0 b(0)|0> = |0>, b'_0 a(-1)|0> = -|0>
  const auto b0 = eng.monomial({{G::B, 0}});
  const auto am1 = eng.monomial({{G::A, -1}});
  CHECK(eng.apply_mode(G::A, 0, b0) == vac);
  CHECK(eng.apply_mode(G::B, 0, am1) == -vac);
  // no contraction across the pair at mismatched depth
  CHECK(eng.apply_mode(G::A, 1, b0).is_zero());

  // Heisenberg: lam_1 lam(-1)|0> = <lam,lam>|0>, lam_0 kills everything
  const auto l1 = eng.monomial({{G::Lam, -1}});
  CHECK(eng.apply_mode(G::Lam, 1, l1) == vac * Rational(5));
  CHECK(eng.apply_mode(G::Lam, 0, l1).is_zero());

  // annihilators on the vacuum
  CHECK(eng.apply_mode(G::A, 0, vac).is_zero());
  CHECK(eng.apply_mode(G::Lam, 2, vac).is_zero());

  // multiplicity: a_0 b(0)^2|0> = 2 b(0)|0>
  const auto b0sq = eng.monomial({{G::B, 0}, {G::B, 0}});
  CHECK(eng.apply_mode(G::A, 0, b0sq) == b0 * Rational(2));
}

TEST_CASE("weight accounting and the configured cap") {
  FockEngine eng(Rational(0), 2);
  CHECK(mode_weight(FockMode{G::A, -1}) == 1);
  CHECK(mode_weight(FockMode{G::B, -1}) == 0);  // physics b(0)
  CHECK(mode_weight(FockMode{G::B, -2}) == 1);  // physics b(-1)
  CHECK(eng.monomial({{G::A, -1}, {G::B, 0}}).weight() == 1);

  CHECK_THROWS_AS((void)eng.monomial({{G::A, -1}, {G::A, -2}}), WeightOverflow);
  const auto wt2 = eng.monomial({{G::A, -1}, {G::A, -1}});
  CHECK_THROWS_AS((void)eng.apply_mode(G::Lam, -1, wt2), WeightOverflow);
  CHECK_THROWS_AS((void)eng.translate(wt2), WeightOverflow);
  // non-creation physics indices are rejected outright
  CHECK_THROWS_AS((void)eng.monomial({{G::B, 1}}), std::invalid_argument);
  CHECK_THROWS_AS((void)eng.monomial({{G::A, 0}}), std::invalid_argument);
}

TEST_CASE("state grammar round trip") {
  FockEngine eng(Rational(0), 4);
  const auto s = eng.monomial({{G::A, -1}, {G::B, 0}, {G::B, 0}}, Rational(-1)) +
                 eng.monomial({{G::B, -1}}, Rational(3, 2)) +
                 eng.monomial({{G::Lam, -1}});
  const std::string text = print_state(s);
  CHECK(text == "-a(-1)b(0)^2|0> + 3/2*b(-1)|0> + lam(-1)|0>");
  CHECK(parse_state(text) == s);
  CHECK(parse_state("0").is_zero());
  CHECK(print_state(FreeFieldState{}) == "0");
  CHECK(parse_state("a(-1)|0> - a(-1)|0>").is_zero());
  CHECK(parse_state("b(0) lam(-1) |0>") == parse_state("lam(-1)b(0)|0>"));
  CHECK_THROWS_AS((void)parse_state("a(0)|0>"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_state("c(-1)|0>"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_state("a(-1)"), std::invalid_argument);
}

TEST_CASE("translation operator") {
  FockEngine eng(Rational(0), 4);
  // T b(0)|0> = b(-1)|0>; T lam(-1)|0> = lam(-2)|0>; T a(-1)|0> = a(-2)|0>
  CHECK(eng.translate(eng.monomial({{G::B, 0}})) == eng.monomial({{G::B, -1}}));
  CHECK(eng.translate(eng.monomial({{G::Lam, -1}})) == eng.monomial({{G::Lam, -2}}));
  CHECK(eng.translate(eng.monomial({{G::A, -1}})) == eng.monomial({{G::A, -2}}));
  CHECK(eng.translate(eng.vacuum()).is_zero());
  // Leibniz over a product monomial
  const auto ab = eng.monomial({{G::A, -1}, {G::B, 0}});
  const auto expect = eng.monomial({{G::A, -2}, {G::B, 0}}) + eng.monomial({{G::A, -1}, {G::B, -1}});
  CHECK(eng.translate(ab) == expect);
}

TEST_CASE("normally ordered products agree with hand expansion") {
  FockEngine eng(Rational(0), 4);
  const auto a = eng.monomial({{G::A, -1}});
  const auto b0sq = eng.monomial({{G::B, 0}, {G::B, 0}});
  const auto ab = eng.monomial({{G::A, -1}, {G::B, 0}});

  // a(-1)|0> acting at depth -1 simply prepends the mode
  CHECK(eng.nth_product(a, b0sq, -1) ==
        eng.monomial({{G::A, -1}, {G::B, 0}, {G::B, 0}}));
  // and the reversed order agrees (creation modes commute)
  CHECK(eng.nth_product(eng.monomial({{G::B, 0}}), a, -1) == ab);

  // (a(-1)b(0))_( -1 )(a(-1)b(0)) = a(-1)^2 b(0)^2 - a(-2)b(0) + a(-1)b(-1)
  const auto expect = eng.monomial({{G::A, -1}, {G::A, -1}, {G::B, 0}, {G::B, 0}}) -
                      eng.monomial({{G::A, -2}, {G::B, 0}}) +
                      eng.monomial({{G::A, -1}, {G::B, -1}});
  CHECK(eng.nth_product(ab, ab, -1) == expect);

  // J = a(-1)b(0)|0>: J_(0)J = 0 and J_(1)J = -|0>
  CHECK(eng.nth_product(ab, ab, 0).is_zero());
  CHECK(eng.nth_product(ab, ab, 1) == -eng.vacuum());
}

TEST_CASE("deformed currents close on affine sl2 with kappa = k/2 - 2") {
  const std::vector<std::pair<Rational, Rational>> table = {
      {Rational(0), Rational(-2)},
      {Rational(2), Rational(-1)},
      {Rational(4), Rational(0)},
      {Rational(7, 3), Rational(-5, 6)},
  };
  for (const auto& [k, expected] : table) {
    CAPTURE(to_string(k));
    FockEngine eng(k, 2);
    const Sl2Triple t = wakimoto_sl2(eng);
    const Sl2FieldReport rep = check_affine_sl2(eng, t);
    for (const auto& line : rep.lines) {
      CAPTURE(line.name);
      CAPTURE(line.detail);
      CHECK(line.pass);
    }
    CHECK(rep.kappa == expected);
    CHECK(rep.kappa == k / 2 - 2);
  }
}

TEST_CASE("Sugawara vector collapses into the Heisenberg subspace at k = 0") {
  FockEngine eng(Rational(0), 2);
  const Sl2Triple t = wakimoto_sl2(eng);
  const FreeFieldState s = sugawara_image(eng, t);
  CHECK(print_state(s) == "-lam(-2)|0> + 1/2*lam(-1)^2|0>");
  CHECK(s == parse_state("1/2*lam(-1)^2|0> - lam(-2)|0>"));
  // at k = 2 the a/b modes do not cancel and the image test refuses
  FockEngine eng2(Rational(2), 2);
  CHECK_THROWS_AS((void)sugawara_image(eng2, wakimoto_sl2(eng2)), std::domain_error);
}

TEST_CASE("product identity spot checks across the parameter grid") {
  FockEngine eng(Rational(3), 8);
  const auto u = eng.monomial({{G::A, -1}, {G::B, 0}});
  const auto v = eng.monomial({{G::B, -1}}) + eng.monomial({{G::Lam, -1}}, Rational(1, 2));
  const auto w = eng.monomial({{G::B, 0}, {G::B, 0}}) - eng.vacuum() * Rational(2);
  for (int m = -1; m <= 1; ++m)
    for (int n = -1; n <= 1; ++n)
      for (int k = -1; k <= 1; ++k) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(borcherds_identity(eng, u, v, w, m, n, k));
      }
}
