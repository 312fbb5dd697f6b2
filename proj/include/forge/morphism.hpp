#pragma once

#include <optional>
#include <string>

#include "forge/algebroid.hpp"

namespace forge {

// Structure-preserving map between two algebroids of the same flavour over
// the same chart ring.  The map is determined by the images of the frame
// fields and the kernel generators; 1-forms map identically, and coefficient
// functions ride along through the (corrected) module action:
//
//   m( sum f_i.tau_i + sum h_r.g_r + w ) =
//       sum f_i . m(tau_i)  +  sum h_r . m(g_r)  +  w .
struct AlgebroidMorphism {
  StructurePtr src;
  StructurePtr tgt;
  std::vector<AlgebroidElement> frame_images;  // elements of tgt, one per frame field
  std::vector<AlgebroidElement> kernel_images; // elements of tgt, one per kernel gen

  AlgebroidElement apply(const AlgebroidElement& e) const;
};

AlgebroidMorphism identity_morphism(const StructurePtr& s);

// g after f; requires *f.tgt == *g.src.
AlgebroidMorphism compose(const AlgebroidMorphism& g, const AlgebroidMorphism& f);

// Verifies, on the sample set (drawn against m.src):
//   anchors of the images match the frame / vanish on the kernel,
//   m(df) = df,   m(f.x) = f.m(x),   m(x o0 y) = m(x) o0 m(y),
//   and <m(x), m(y)> = <x, y> (non-Lie flavours).
AxiomReport check_morphism(const AlgebroidMorphism& m, const SampleSet& samples);

// Same structure with alpha (vertex twist / Courant flux) shifted by the
// closed 3-form gamma.  Throws std::domain_error for the Lie flavour or a
// non-closed gamma.
StructurePtr twist(const StructurePtr& s, const DiffForm& gamma);

// Gauge transformation by a 2-form beta:
//   tau_i -> tau_i + iota_{tau_i} beta,   g_r -> g_r,   forms fixed;
// an isomorphism s -> twist(s, -d beta).  (The sign is forced by the frame
// products: the correction the gauge produces is iota_j iota_i d beta.)
AlgebroidMorphism exp_beta(const StructurePtr& s, const DiffForm& beta);

// The same frame/kernel images read between shifted endpoints:
// if m : S -> T is a morphism, the identical images define a morphism
// twist(S, gamma) -> twist(T, gamma).  (Anchor compatibility makes the frame
// coefficients of x and m(x) agree, so the extra gamma-contraction produced
// on each side of the product condition is the same form.)
AlgebroidMorphism transport_twist(const AlgebroidMorphism& m, const DiffForm& gamma);

struct TwistEquivalence {
  bool equivalent = false;
  std::optional<AlgebroidMorphism> witness; // d1 -> d2 when equivalent
  DiffForm primitive;                       // beta with d beta = alpha1 - alpha2
  std::string note;
};

// Decides whether two structures differing only in alpha are gauge equivalent
// by searching for a primitive of alpha1 - alpha2: first the term-by-term
// integration, then a bounded monomial ansatz with exponents in
// [-degree_window, degree_window].  A miss inside the window is reported as
// inconclusive, never as a proof of inequivalence.
TwistEquivalence twist_equivalence(const StructurePtr& d1, const StructurePtr& d2,
                                   int degree_window);

} // namespace forge
