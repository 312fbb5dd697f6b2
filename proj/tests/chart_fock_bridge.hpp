#pragma once

// Test-support bridge between the two product engines.  A one-variable
// polynomial chart with coordinate frame {d/dx}, at most one kernel generator
// (pairing k, zero curvature, zero twist) realizes the same vertex structure
// as the free-field state space with <lam,lam> = k under
//
//     x  ->  b(0)|0>,      d/dx       ->  a(-1)|0>,
//     dx ->  b(-1)|0>,     lam        ->  lam(-1)|0>,
//
// extended by:  mapping f . tau_0 through tau_(-1)-action minus the
// translation correction, and the zero-anchor slots honestly.  The tests
// compare every chart-side product against the mode-side product of the
// images; the two evaluations share no code.

#include <stdexcept>

#include "forge/algebroid.hpp"
#include "forge/fock.hpp"

namespace forge::testing {

inline FreeFieldState poly_state(const FockEngine& eng, const LaurentPoly& f) {
  FreeFieldState out;
  for (const auto& [mono, c] : f.terms()) {
    if (mono[0] < 0) throw std::invalid_argument("bridge needs polynomial coefficients");
    std::vector<std::pair<FockGen, int>> modes(static_cast<std::size_t>(mono[0]),
                                               {FockGen::B, 0});
    out += eng.monomial(modes, c);
  }
  return out;
}

inline FreeFieldState bridge_element(const FockEngine& eng, const AlgebroidElement& e) {
  const RingPtr ring = e.str->ring;
  if (ring->nvars() != 1 || e.vf.size() != 1 || e.kr.size() > 1)
    throw std::invalid_argument("bridge covers one-variable rank <= 1 charts only");
  FreeFieldState out;
  // f . tau = tau_(-1) f - T(tau(f))
  const LaurentPoly& f = e.vf[0];
  if (!f.is_zero()) {
    out += eng.nth_product(eng.monomial({{FockGen::A, -1}}), poly_state(eng, f), -1);
    out -= eng.translate(poly_state(eng, e.str->frame[0].apply(f)));
  }
  // h . lam = lam_(-1) h (zero anchor: the action is honest)
  if (!e.kr.empty() && !e.kr[0].is_zero())
    out += eng.nth_product(eng.monomial({{FockGen::Lam, -1}}), poly_state(eng, e.kr[0]), -1);
  // g dx = b(-1)_( -1 ) g
  const LaurentPoly g = e.form.coefficient(FormIndex{0});
  if (!g.is_zero())
    out += eng.nth_product(eng.monomial({{FockGen::B, -1}}), poly_state(eng, g), -1);
  return out;
}

} // namespace forge::testing
