#pragma once

#include "forge/morphism.hpp"

namespace forge {

// Baer arithmetic between the two extension flavours over a fixed chart:
// a Courant extension Q (kernel, curvature, flux H) combines with a
// kernel-free vertex extension D (twist alpha_D) into a vertex extension
// carrying Q's kernel data and the summed 3-form.  The underlying element
// model is the anchor-matched pair (q, x) modulo the antidiagonal copy of
// the 1-forms, which is why the form slots simply add.
//
//   boxplus : (Q, D) -> vertex  { kernel/curvature of Q, alpha = H + alpha_D }
//   boxminus: (A, D) -> Courant { kernel/curvature of A, H = alpha_A - alpha_D }
//
// Round trips boxplus(boxminus(A, D), D) == A and boxminus(boxplus(Q, D), D)
// == Q hold exactly, slot by slot.  Both throw std::invalid_argument unless
// the operands share ring and frame, D is a kernel-free vertex structure, and
// the first operand has the expected flavour.
StructurePtr boxplus(const StructurePtr& Q, const StructurePtr& D);
StructurePtr boxminus(const StructurePtr& A, const StructurePtr& D);

// Pairs a Courant morphism f: Q -> Q' with a kernel-free vertex morphism
// g: D -> D' into boxplus(Q, D) -> boxplus(Q', D').  Frame images combine as
// f's image plus the form part of g's image (their anchors already agree);
// kernel images are f's, carried over verbatim.
AlgebroidMorphism boxplus_morphism(const AlgebroidMorphism& f, const AlgebroidMorphism& g);

} // namespace forge
