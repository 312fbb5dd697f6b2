#pragma once

#include <array>
#include <map>
#include <utility>

#include "forge/algebroid.hpp"

namespace forge {

// A chart cover for Cech computations: chart rings, one overlap ring per
// unordered pair with the two restriction substitutions into it, and one ring
// per unordered triple with restrictions from the three pair overlaps.  Data
// living on a chart moves onto an overlap through RingMorphism::map (pullback
// for forms and coefficients, Jacobian pushforward for frame fields).
struct Overlap {
  RingPtr ring;
  RingMorphism from_first;  // chart i ring -> overlap ring   (pair key (i, j), i < j)
  RingMorphism from_second; // chart j ring -> overlap ring
};

struct TripleOverlap {
  RingPtr ring;
  RingMorphism from_01; // overlap (i,j) ring -> triple ring   (triple key (i, j, k))
  RingMorphism from_02; // overlap (i,k) ring -> triple ring
  RingMorphism from_12; // overlap (j,k) ring -> triple ring
};

using PairKey = std::pair<std::size_t, std::size_t>;
using TripleKey = std::array<std::size_t, 3>;

struct Cover {
  std::vector<RingPtr> charts;
  std::map<PairKey, Overlap> pairs;     // keys i < j
  std::map<TripleKey, TripleOverlap> triples; // keys i < j < k; pair entries must exist

  std::size_t size() const { return charts.size(); }
  const Overlap& pair(std::size_t i, std::size_t j) const; // requires i < j

  // Shape checks: key ranges and ordering, substitution endpoint rings, and
  // the coherence of the two routes from each chart of a triple into the
  // triple ring (they must be the same substitution).
  void validate() const;
};

// The cover in which every chart and every overlap is the same ring and all
// restrictions are identity substitutions.  The Cech algebra is exercised in
// full; only the coordinate changes are trivial.
Cover identity_cover(const RingPtr& ring, std::size_t ncharts);

// Transport a chart structure onto an overlap: frame fields pushed forward,
// curvature and twist pulled back, the kernel carried along unchanged.
StructurePtr restrict_structure(const StructurePtr& s, const RingMorphism& r);

// Transport an element of s onto the restricted structure: normal-form
// coefficients substituted slotwise, the 1-form part pulled back.
AlgebroidElement restrict_element(const AlgebroidElement& e, const RingMorphism& r,
                                  const StructurePtr& target);

// Pairing-weighted wedge of two kernel-indexed form families:
//
//   g_pair_wedge(K, P, Q) = 1/2 sum_{r,s} K_{rs} P_r ^ Q_s.
//
// The one-half is the symmetrization normalization: with it, the flux
// compatibility of a Courant chart reads d(flux) = g_pair_wedge(c, c), and
// the triple composite of overlap transitions is exp of minus the
// g_pair_wedge of consecutive connection differences.
DiffForm g_pair_wedge(const KernelAlgebra& k, const std::vector<DiffForm>& P,
                      const std::vector<DiffForm>& Q);

} // namespace forge
