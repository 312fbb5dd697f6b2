#pragma once

#include <optional>
#include <string>

#include "forge/cover.hpp"
#include "forge/morphism.hpp"

namespace forge {

// Degree-(3,2) Cech data on a cover: one 3-form alpha_ij per pair overlap and
// one 2-form beta_ijk per triple.  The cocycle conditions are
//
//   d alpha_ij = 0                                       (each pair),
//   d beta_ijk = alpha_ij| + alpha_jk| - alpha_ik|       (each triple),
//
// with the reverse orientation read as alpha_ji = -alpha_ij.  Such a pair
// classifies how per-chart structures twisted by the alpha_ij glue; two
// cocycles differing by a coboundary (see coboundary_test) glue isomorphically.
struct GerbeCocycle {
  std::map<PairKey, DiffForm> alpha;  // degree 3, on the pair overlap ring
  std::map<TripleKey, DiffForm> beta; // degree 2, on the triple ring
};

// Slotwise sum; both operands must live on the same key sets.
GerbeCocycle add(const GerbeCocycle& a, const GerbeCocycle& b);

// Lines: shape (keys and degrees match the cover), alpha-closed, beta-step
// (the triple condition above), quadruple-step (vacuous until a cover tracks
// quadruple overlaps; always passes with a note).
AxiomReport check_gerbe_cocycle(const Cover& c, const GerbeCocycle& g);

// ---------------------------------------------------------------------------
// Courant side: a family of exact Courant charts glued by kernel-valued
// connection 1-forms.
// ---------------------------------------------------------------------------

// Per-chart Courant structures Q_i together with, for each overlap (i, j),
// a family A_ij of 1-forms on the overlap ring, one per kernel generator,
// supported on central generators.  The gluing requirements (checked by
// check_courant_gluing) are
//
//   c_i| - c_j| = d A_ij          (curvature step, per generator),
//   A_ij| + A_jk| = A_ik|         (difference cocycle on triples).
struct CourantGluingData {
  std::vector<StructurePtr> charts;
  std::map<PairKey, std::vector<DiffForm>> connection; // keys i < j; A_ji = -A_ij
};

// Lines: chart-shape, connection-shape, central-valued, curvature-step,
// difference-cocycle.
AxiomReport check_courant_gluing(const Cover& c, const CourantGluingData& g);

// The overlap transition theta_ij : Q_i| -> twist(Q_j|, alpha_ij) determined
// by A = A_ij (writing p_ar = iota_{tau_a} A_r and K for the kernel pairing):
//
//   tau_a |-> tau_a + sum_r p_ar g_r - 1/2 sum_{r,s} K_rs p_ar A_s,
//   g_r   |-> g_r - sum_s K_rs A_s,
//
// an exact isomorphism whenever the gluing checks pass.  Defined for any
// ordered i != j via A_ji = -A_ij.  Requires the two restricted frames to
// agree on the overlap (the transition permutes nothing); covers whose charts
// restrict to different frames need bespoke gluing morphisms instead.
AlgebroidMorphism courant_transition(const Cover& c, const CourantGluingData& g,
                                     std::size_t i, std::size_t j);

// The cocycle the transitions realize:
//
//   alpha_ij  = H_i| - H_j| - sum_{r,s} K_rs c_i,r| ^ A_ij,s
//                           + 1/2 sum_{r,s} K_rs dA_ij,r ^ A_ij,s
//             = H_i| - H_j| - 2 g_pair_wedge(c_i|, A_ij) + g_pair_wedge(dA_ij, A_ij),
//   beta_ijk  = g_pair_wedge(A_ij|, A_jk|),
//
// and the cyclic triple composite theta_ki o theta_jk o theta_ij equals
// exp_beta(Q_i|, -beta_ijk) on the nose.
GerbeCocycle courant_gluing_cocycle(const Cover& c, const CourantGluingData& g);

// ---------------------------------------------------------------------------
// Chiral differential operator side: kernel-free vertex charts glued by
// gauge 2-forms.
// ---------------------------------------------------------------------------

// Per-chart kernel-free vertex structures D_i with twists alpha_i, glued by
// one 2-form b_ij per overlap.
struct CdoGluingData {
  std::vector<StructurePtr> charts;
  std::map<PairKey, DiffForm> b; // keys i < j; b_ji = -b_ij
};

// Lines: chart-shape (kernel-free vertex over the cover rings), gauge-shape
// (keys and degrees).
AxiomReport check_cdo_gluing(const Cover& c, const CdoGluingData& g);

// eta_ij = the gauge transformation of D_i| by b_ij; its target equals
// twist(D_j|, alpha_ij) with alpha_ij = alpha_i| - alpha_j| - d b_ij.
// Defined for ordered i != j via b_ji = -b_ij.  Same equal-frame requirement
// as courant_transition.
AlgebroidMorphism cdo_transition(const Cover& c, const CdoGluingData& g,
                                 std::size_t i, std::size_t j);

//   alpha_ij = alpha_i| - alpha_j| - d b_ij,
//   beta_ijk = -(b_jk| - b_ik| + b_ij|),
//
// and the cyclic triple composite of the eta's equals
// exp_beta(D_i|, -beta_ijk).
GerbeCocycle cdo_gluing_cocycle(const Cover& c, const CdoGluingData& g);

// ---------------------------------------------------------------------------
// Vertex extension: the Baer sum of the two sides.
// ---------------------------------------------------------------------------

// boxplus(Q_i, D_i): the vertex chart extending the Courant chart by the
// chiral twist.
StructurePtr vertex_chart(const CourantGluingData& q, const CdoGluingData& d,
                          std::size_t i);

// psi_ij = boxplus_morphism(theta_ij, eta_ij) :
//   boxplus(Q_i|, D_i|) -> twist(boxplus(Q_j|, D_j|), alpha^Q_ij + alpha^ch_ij).
AlgebroidMorphism vertex_transition(const Cover& c, const CourantGluingData& q,
                                    const CdoGluingData& d, std::size_t i,
                                    std::size_t j);

// Sum of the two gluing cocycles; the class obstructing a global vertex
// algebroid extension.  Equals add(courant_gluing_cocycle, cdo_gluing_cocycle).
GerbeCocycle vertex_gluing_cocycle(const Cover& c, const CourantGluingData& q,
                                   const CdoGluingData& d);

// ---------------------------------------------------------------------------
// Coboundary test.
// ---------------------------------------------------------------------------

// chart_forms h_i (closed 3-forms) and pair_forms m_ij (2-forms) trivializing
// a cocycle:
//
//   alpha_ij = h_i| - h_j| - d m_ij,
//   beta_ijk = -(m_jk| - m_ik| + m_ij|).
//
// The orientation matches cdo_gluing_cocycle, so the cocycle of a CDO gluing
// is trivialized by its own chart data.
struct CoboundaryWitness {
  std::vector<DiffForm> chart_forms;
  std::map<PairKey, DiffForm> pair_forms;
};

struct CoboundaryResult {
  bool trivialized = false;
  std::optional<CoboundaryWitness> witness;
  std::string note;
};

// Searches for a witness with all monomial exponents in [-window, window]
// (componentwise; non-inverted variables start at 0), by exact linear algebra
// over the monomial coefficients.  A hit is verified exactly before being
// returned.  A miss only shows there is no witness inside the window: the
// result says "class undecided", never "nontrivial".  Throws
// std::domain_error when the input fails check_gerbe_cocycle.
CoboundaryResult coboundary_test(const Cover& c, const GerbeCocycle& g,
                                 int window);

} // namespace forge
