#pragma once

#include <stdexcept>
#include <utility>

#include "forge/cover.hpp"
#include "forge/morphism.hpp"

namespace forge {

// Two-chart family over the projective line.  The chart rings are Q[x] and
// Q[y], glued over Q[x, 1/x] by y = 1/x (so d/dy pushes forward to -x^2
// d/dx).  Each chart carries the flat vertex structure -- coordinate frame,
// zero curvature, zero twist, and for the deformed family a rank-one kernel
// lam with <lam, lam> = k -- so the whole geometry of the family sits in the
// gluing morphism over the overlap.
//
// The overlap restrictions have DIFFERENT frames ({d/dx} from chart 0,
// {-x^2 d/dx} from chart 1), so the gluing is a bespoke morphism rather than
// a frame-preserving overlap transition:
//
//   kernel-free:  d/dy |-> -x^2 . d/dx - 4 dx
//   deformed(k):  d/dy |-> -x^2 . d/dx - 4 dx + x . lam + (k/2) dx
//                 lam  |-> lam + k x^-1 dx
//
// The -4 dx term is forced by the vertex product corrections (it is what
// makes the change of coordinates a morphism at all); the x . lam and
// (k/2) dx terms deform it through the kernel line.
struct P1Family {
  Rational k = 0;           // kernel pairing <lam, lam>; 0 for the plain family
  bool has_kernel = false;
  Cover cov;                // charts {Q[x], Q[y]}, one overlap, no triples
  StructurePtr chart0;      // structure on Q[x]
  StructurePtr chart1;      // structure on Q[y]
  StructurePtr over0;       // chart0 restricted to the overlap (frame {d/dx})
  StructurePtr over1;       // chart1 restricted (frame {-x^2 d/dx})
  AlgebroidMorphism gluing;         // over1 -> over0
  AlgebroidMorphism gluing_inverse; // over0 -> over1 (same formula, charts swapped)
};

// The kernel-free chart family (plain chiral differential operators on the
// line, glued as above).
P1Family p1_cdo_family();

// The rank-one-kernel family at deformation parameter k.
P1Family p1_deformed_family(const Rational& k);

struct Sl2Sections {
  AlgebroidElement e, h, f;
};

// The distinguished global sl2 triple in chart-0 normal form:
//
//   e = d/dx
//   h = -2x . d/dx + lam
//   f = -x^2 . d/dx - 4 dx + x . lam + (k/2) dx
//
// (the lam slots are absent for the kernel-free family).  Each current is a
// global section: its two chart expressions agree through the gluing.
Sl2Sections p1_sl2_embedding(const P1Family& fam);

// The same sections written on chart 1.  The x <-> y swap exchanges e and f
// and negates the kernel slot of h:
//
//   e|1 = -y^2 . d/dy - 4 dy + y . lam + (k/2) dy
//   h|1 = 2y . d/dy - lam
//   f|1 = d/dy
Sl2Sections p1_sl2_chart1(const P1Family& fam);

// The affine level of the embedded currents, read off the chart products:
// the constant <e, f>, with <h, h> == 2 <e, f> asserted (std::logic_error on
// any mismatch or non-constant pairing).  Exact arithmetic throughout; for
// the deformed family the value works out to k/2 - 2.
Rational p1_sl2_level(const P1Family& fam);

// Verifies the affine sl2 relations of the embedded triple on both charts
// and the gluing of each current across the overlap.  Lines:
//   bracket-h-e, bracket-h-f, bracket-e-f   ([h,e]=2e, [h,f]=-2f, [e,f]=h)
//   bracket-mirror                          (reversed products: [x,y]+[y,x]=d<x,y>)
//   bracket-diagonal                        ([e,e]=[h,h]=[f,f]=0)
//   pairing-e-f, pairing-h-h                (<e,f> = level, <h,h> = 2 level)
//   pairing-off-diagonal                    (<e,h> = <f,h> = <e,e> = <f,f> = 0)
//   gluing-e, gluing-h, gluing-f            (chart-1 expression maps to chart-0)
AxiomReport check_p1_sl2(const P1Family& fam);

// A basis of the space of global sections with polynomial coefficient degree
// <= degree_bound: pairs (s0, s1) of chart elements whose restrictions agree
// through the gluing.  Computed as the exact nullspace of the gluing
// equation over the monomial ansatz; every basis pair is re-verified against
// the gluing before being returned (std::logic_error if that ever fails).
struct GlobalSections {
  int degree_bound = 0;
  std::vector<std::pair<AlgebroidElement, AlgebroidElement>> basis; // (chart0, chart1)

  std::size_t dimension() const { return basis.size(); }
};

// Thrown when the section space is still growing between degree_bound and
// degree_bound + 2, i.e. the ansatz window provably cut the answer short.
struct AnsatzTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Solves at degree_bound and again at degree_bound + 2; returns the
// degree_bound basis only when the two dimensions agree, and throws
// AnsatzTooSmall otherwise.
GlobalSections p1_global_sections(const P1Family& fam, int degree_bound = 4);

} // namespace forge
