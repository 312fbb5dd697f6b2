#pragma once

#include "forge/gerbe.hpp"

// Shared three-chart gluing fixtures on the identity cover over Q[x,y,z]:
// a Courant gluing with an abelian or sl2-plus-center kernel, a chiral
// gluing, and the hand-computed cocycles each must produce.  Used by the
// gluing tests and by the acceptance run.
namespace forge {
namespace gerbefix {

inline LaurentPoly v(const RingPtr& r, std::size_t i, int e = 1) {
  return LaurentPoly::variable(r, i, e);
}

struct Bundle {
  RingPtr R;
  Cover cov;
  CourantGluingData q;
  CdoGluingData d;
  GerbeCocycle q_expect;
  GerbeCocycle d_expect;
};

// Chiral side shared by both bundles: volume-form twists z, 0, x glued by
// quadratic 2-forms.  Expected cocycle:
//   alpha_01 = -z vol,  alpha_02 = (z-x-1) vol,  alpha_12 = (1-x) vol,
//   beta_012 = -(y dx^dz - x dy^dz + z^2 dx^dy).
inline void fill_cdo(Bundle& b) {
  const RingPtr& R = b.R;
  const auto vol = [&R](const LaurentPoly& c) {
    return DiffForm::term(R, {0, 1, 2}, c);
  };
  b.d.charts = {make_cdo(R, vol(v(R, 2))), make_cdo(R),
                make_cdo(R, vol(v(R, 0)))};
  const DiffForm b01 = DiffForm::term(R, {0, 1}, v(R, 2, 2)); // z^2 dx^dy
  const DiffForm b02 = DiffForm::term(R, {1, 2}, v(R, 0));    // x   dy^dz
  const DiffForm b12 = DiffForm::term(R, {0, 2}, v(R, 1));    // y   dx^dz
  b.d.b[{0, 1}] = b01;
  b.d.b[{0, 2}] = b02;
  b.d.b[{1, 2}] = b12;
  const LaurentPoly one = LaurentPoly::constant(R, 1);
  b.d_expect.alpha[{0, 1}] = vol(-v(R, 2));
  b.d_expect.alpha[{0, 2}] = vol(v(R, 2) - v(R, 0) - one);
  b.d_expect.alpha[{1, 2}] = vol(one - v(R, 0));
  b.d_expect.beta[TripleKey{0, 1, 2}] = -(b12 - b02 + b01);
}

// Rank-one abelian kernel, <lam,lam> = 1.  Curvatures
//   c_0 = dx^dy + dx^dz,  c_1 = dx^dy,  c_2 = dx^dy + 2 dx^dz,
// fluxes H = (x, 0, y) vol, connection A_01 = x dz, A_02 = z dx.
// Expected cocycle:
//   alpha_01 = 0,  alpha_02 = alpha_12 = (x-y) vol,
//   beta_012 = -1/2 xz dx^dz.
inline Bundle abelian_bundle() {
  Bundle b;
  b.R = make_ring({"x", "y", "z"});
  const RingPtr& R = b.R;
  b.cov = identity_cover(R, 3);
  const KernelAlgebra k = KernelAlgebra::abelian({"lam"}, {{Rational(1)}});
  const LaurentPoly one = LaurentPoly::constant(R, 1);
  const DiffForm dxdy = DiffForm::term(R, {0, 1}, one);
  const DiffForm dxdz = DiffForm::term(R, {0, 2}, one);
  const auto vol = [&R](const LaurentPoly& c) {
    return DiffForm::term(R, {0, 1, 2}, c);
  };
  // <c ^ c> vanishes (every c_i is a multiple of dx wedged with itself), so
  // any flux passes the compatibility gate on three variables.
  b.q.charts = {make_QNH(R, k, {dxdy + dxdz}, vol(v(R, 0))),
                make_QNH(R, k, {dxdy}, DiffForm(R, 3)),
                make_QNH(R, k, {dxdy + dxdz.scaled(Rational(2))}, vol(v(R, 1)))};
  const DiffForm a01 = DiffForm::term(R, {2}, v(R, 0)); // x dz
  const DiffForm a02 = DiffForm::term(R, {0}, v(R, 2)); // z dx
  b.q.connection[{0, 1}] = {a01};
  b.q.connection[{0, 2}] = {a02};
  b.q.connection[{1, 2}] = {a02 - a01};
  b.q_expect.alpha[{0, 1}] = DiffForm(R, 3);
  b.q_expect.alpha[{0, 2}] = vol(v(R, 0) - v(R, 1));
  b.q_expect.alpha[{1, 2}] = vol(v(R, 0) - v(R, 1));
  b.q_expect.beta[TripleKey{0, 1, 2}] =
      DiffForm::term(R, {0, 2}, v(R, 0) * v(R, 2)).scaled(Rational(-1, 2));
  fill_cdo(b);
  return b;
}

// sl2 + center kernel (<e,f> = 1, <h,h> = 2, <z,z> = 1), connection valued
// in the center only.  The sl2 generators carry zero curvature: the engine's
// quotient Jacobi forces the curvature to pair to zero with [g, g], and the
// pairing is block-diagonal, so only the central component may be curved.
//   c^z = (dx^dy, 0, -dy^dz),  H = (xy, 0, y) vol,
//   A_01 = x dy . z,  A_12 = y dz . z.
// Expected cocycle:
//   alpha_01 = xy vol,  alpha_02 = (xy - 3/2 y) vol,  alpha_12 = -y vol,
//   beta_012 = 1/2 xy dy^dz.
inline Bundle sl2z_bundle() {
  Bundle b;
  b.R = make_ring({"x", "y", "z"});
  const RingPtr& R = b.R;
  b.cov = identity_cover(R, 3);
  const KernelAlgebra k = KernelAlgebra::sl2_plus_center(1, 1);
  const LaurentPoly one = LaurentPoly::constant(R, 1);
  const DiffForm zero2(R, 2);
  const DiffForm dxdy = DiffForm::term(R, {0, 1}, one);
  const DiffForm dydz = DiffForm::term(R, {1, 2}, one);
  const auto vol = [&R](const LaurentPoly& c) {
    return DiffForm::term(R, {0, 1, 2}, c);
  };
  b.q.charts = {
      make_QNH(R, k, {zero2, zero2, zero2, dxdy}, vol(v(R, 0) * v(R, 1))),
      make_QNH(R, k, {zero2, zero2, zero2, zero2}, DiffForm(R, 3)),
      make_QNH(R, k, {zero2, zero2, zero2, -dydz}, vol(v(R, 1)))};
  const DiffForm a01 = DiffForm::term(R, {1}, v(R, 0)); // x dy
  const DiffForm a12 = DiffForm::term(R, {2}, v(R, 1)); // y dz
  const DiffForm zero1(R, 1);
  b.q.connection[{0, 1}] = {zero1, zero1, zero1, a01};
  b.q.connection[{0, 2}] = {zero1, zero1, zero1, a01 + a12};
  b.q.connection[{1, 2}] = {zero1, zero1, zero1, a12};
  b.q_expect.alpha[{0, 1}] = vol(v(R, 0) * v(R, 1));
  b.q_expect.alpha[{0, 2}] =
      vol(v(R, 0) * v(R, 1) - v(R, 1) * Rational(3, 2));
  b.q_expect.alpha[{1, 2}] = vol(-v(R, 1));
  b.q_expect.beta[TripleKey{0, 1, 2}] =
      DiffForm::term(R, {1, 2}, v(R, 0) * v(R, 1)).scaled(Rational(1, 2));
  fill_cdo(b);
  return b;
}

} // namespace gerbefix
} // namespace forge
