#pragma once

#include <memory>
#include <string>
#include <vector>

#include "forge/calculus.hpp"
#include "forge/kernel_algebra.hpp"

namespace forge {

// Chart-level model of a transitive algebroid in one of three flavours.
//
// Every element is kept in the normal form
//
//     e  =  sum_i f_i . tau_i  +  sum_r h_r . g_r  +  omega
//
// against a fixed commuting frame {tau_i} of vector fields, a basis {g_r} of
// the kernel algebra, and a 1-form part omega (absent for the Lie flavour).
// A structure is the frame together with the kernel algebra, one curvature
// 2-form per kernel generator, and a 3-form slot (the twist for the vertex
// flavour, the flux for the Courant flavour).
//
// The three products are evaluated by closed formulas in this normal form.
// The base products of frame/kernel/form generators:
//
//   tau_i o0 tau_j = iota_i iota_j alpha + sum_r (iota_i iota_j c_r) . g_r
//   tau_i o0 g_r   = -sum_s K_{sr} iota_{tau_i} c_s          (a 1-form)
//   g_r o0 g_s     = sum_t c^t_{rs} . g_t
//   tau_i o1 tau_j = 0,  g_r o1 g_s = K_{rs},  tau o1 g = 0
//   e o0 omega     = Lie_{anchor(e)} omega,  omega o0 e = -iota_{anchor(e)} d omega
//   tau_i o1 omega = iota_{tau_i} omega
//
// For the vertex flavour the module action f . e and the products acquire the
// second-order correction terms demanded by the axioms (the action is not
// associative over the ring); for the Courant/Lie flavours the action is the
// honest module structure and the corrections vanish.  One engine evaluates
// all three, switching the correction terms on the flavour.
enum class AlgebroidKind { Lie, Courant, Vertex };

std::string kind_name(AlgebroidKind k);

struct AlgebroidStructure {
  RingPtr ring;
  AlgebroidKind kind = AlgebroidKind::Vertex;
  std::vector<VectorField> frame;   // pairwise commuting
  KernelAlgebra kernel;
  std::vector<DiffForm> curvature;  // degree 2, one per kernel generator
  DiffForm alpha;                   // degree 3: vertex twist / Courant flux

  void validate() const; // shape checks + frame commutativity

  friend bool operator==(const AlgebroidStructure& a, const AlgebroidStructure& b) {
    return same_ring(a.ring, b.ring) && a.kind == b.kind && a.frame == b.frame &&
           a.kernel == b.kernel && a.curvature == b.curvature && a.alpha == b.alpha;
  }
};

using StructurePtr = std::shared_ptr<const AlgebroidStructure>;

StructurePtr make_structure(AlgebroidStructure s); // validates

// Standard chart: coordinate frame, trivial kernel, twist alpha (default 0).
// alpha must be closed.
StructurePtr make_cdo(const RingPtr& ring);
StructurePtr make_cdo(const RingPtr& ring, const DiffForm& alpha);

// Courant chart with prescribed kernel, curvature and flux.  Requires the
// compatibility 2 dH = <c ^ c> (sum_{rs} K_{rs} c_r ^ c_s) and throws
// std::domain_error("pontryagin mismatch: ...") otherwise.
StructurePtr make_QNH(const RingPtr& ring, KernelAlgebra kernel,
                      std::vector<DiffForm> curvature, const DiffForm& H);

// Lie-flavour extension of the tangent sheaf by a trivial abelian kernel with
// curvature 2-forms lambda2 (each closed).
StructurePtr make_ttw_chart(const RingPtr& ring, std::vector<DiffForm> lambda2);

// Vertex flavour of the same data, with a kernel pairing and a twist.
StructurePtr make_tcdo_chart(const RingPtr& ring, std::vector<DiffForm> lambda2,
                             std::vector<std::vector<Rational>> kernel_pairing,
                             const DiffForm& alpha);

struct AlgebroidElement {
  StructurePtr str;
  std::vector<LaurentPoly> vf; // coefficients against the frame
  std::vector<LaurentPoly> kr; // coefficients against kernel generators
  DiffForm form;               // degree 1 (identically zero for Lie flavour)

  bool is_zero() const;

  AlgebroidElement operator-() const;
  AlgebroidElement& operator+=(const AlgebroidElement& o);
  AlgebroidElement& operator-=(const AlgebroidElement& o);
  friend AlgebroidElement operator+(AlgebroidElement a, const AlgebroidElement& b) { return a += b; }
  friend AlgebroidElement operator-(AlgebroidElement a, const AlgebroidElement& b) { return a -= b; }
  friend bool operator==(const AlgebroidElement& a, const AlgebroidElement& b) {
    return a.vf == b.vf && a.kr == b.kr && a.form == b.form;
  }

  std::string str_repr() const;
};

AlgebroidElement zero_element(const StructurePtr& s);
AlgebroidElement frame_element(const StructurePtr& s, std::size_t i);
AlgebroidElement kernel_element(const StructurePtr& s, std::size_t r);
AlgebroidElement form_element(const StructurePtr& s, DiffForm omega);
AlgebroidElement make_element(const StructurePtr& s, std::vector<LaurentPoly> vf,
                              std::vector<LaurentPoly> kr, DiffForm form);

// Scale every coefficient by f with no correction terms (the plain module
// structure; for Courant/Lie this IS the module action).
AlgebroidElement scale_plain(const LaurentPoly& f, const AlgebroidElement& e);
AlgebroidElement scale(const Rational& c, const AlgebroidElement& e);

// The (-1) action f . e: plain for Courant/Lie, corrected for vertex.
AlgebroidElement minus_one(const LaurentPoly& f, const AlgebroidElement& e);

// The (0) product: Courant/Lie bracket or the vertex 0-product.
AlgebroidElement zero_product(const AlgebroidElement& x, const AlgebroidElement& y);

// The (1) pairing into functions (Courant symmetric pairing / vertex 1-product).
// Throws std::domain_error for the Lie flavour.
LaurentPoly one_pairing(const AlgebroidElement& x, const AlgebroidElement& y);

// d f as an element (pure 1-form part).  Throws for the Lie flavour.
AlgebroidElement d_op(const StructurePtr& s, const LaurentPoly& f);

VectorField anchor(const AlgebroidElement& e);
LaurentPoly anchor_apply(const AlgebroidElement& e, const LaurentPoly& f);

// --- axiom suites -----------------------------------------------------------

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail; // instance counts, first counterexample, ...
};

struct AxiomReport {
  std::vector<CheckLine> lines;
  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

// Deterministic sample data for the axiom suites; see sampling.hpp for the
// generator.  `funcs` are ring elements, `elems` algebroid elements.
struct SampleSet {
  std::vector<LaurentPoly> funcs;
  std::vector<AlgebroidElement> elems;
  std::size_t base_count = 0;       // elems[0..base_count) are the exhaustive base
  std::size_t pair_budget = 320;    // extra pseudorandom pairs for quadratic axioms
  std::size_t triple_budget = 220;  // extra pseudorandom triples for cubic axioms
  std::size_t triple_base_cap = 12; // exhaustive-triple prefix of the base
  std::uint64_t seed = 0;
};

SampleSet default_samples(const StructurePtr& s, std::uint64_t seed);

// The nine vertex identities plus the Jacobi property of the quotient bracket
// (form parts dropped).  All comparisons are exact.
AxiomReport check_vertex_axioms(const StructurePtr& s, const SampleSet& samples);

// The Courant package: anchor/d complex, Leibniz, invariance, d-compatibility,
// pairing-anchor, symmetrization, and the Leibniz form of Jacobi.
AxiomReport check_courant_axioms(const StructurePtr& s, const SampleSet& samples);

// Lie flavour: anchored Leibniz bracket + Jacobi.
AxiomReport check_lie_axioms(const StructurePtr& s, const SampleSet& samples);

// Dispatch on s->kind.
AxiomReport check_axioms(const StructurePtr& s, const SampleSet& samples);

} // namespace forge
