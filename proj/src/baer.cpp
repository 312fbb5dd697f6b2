#include "forge/baer.hpp"

#include <stdexcept>

namespace forge {

namespace {

void require_combinable(const StructurePtr& a, const StructurePtr& d,
                        AlgebroidKind first_kind, const char* what) {
  if (a->kind != first_kind)
    throw std::invalid_argument(std::string(what) + ": wrong flavour of first operand");
  if (d->kind != AlgebroidKind::Vertex)
    throw std::invalid_argument(std::string(what) + ": second operand must be a vertex structure");
  if (d->kernel.dim() != 0)
    throw std::invalid_argument(std::string(what) + ": second operand must be kernel-free");
  if (!same_ring(a->ring, d->ring))
    throw std::invalid_argument(std::string(what) + ": operands live on different rings");
  if (!(a->frame == d->frame))
    throw std::invalid_argument(std::string(what) + ": operands use different frames");
  // A kernel-free vertex chart forces a closed twist (its pairing wedge is 0),
  // and the flux compatibility of the result leans on that.
  if (!de_rham(d->alpha).is_zero())
    throw std::domain_error(std::string(what) + ": kernel-free operand has a non-closed twist");
}

} // namespace

StructurePtr boxplus(const StructurePtr& Q, const StructurePtr& D) {
  require_combinable(Q, D, AlgebroidKind::Courant, "boxplus");
  AlgebroidStructure s = *Q;
  s.kind = AlgebroidKind::Vertex;
  s.alpha = Q->alpha + D->alpha;
  return make_structure(std::move(s));
}

StructurePtr boxminus(const StructurePtr& A, const StructurePtr& D) {
  require_combinable(A, D, AlgebroidKind::Vertex, "boxminus");
  AlgebroidStructure s = *A;
  s.kind = AlgebroidKind::Courant;
  s.alpha = A->alpha - D->alpha;
  return make_structure(std::move(s));
}

AlgebroidMorphism boxplus_morphism(const AlgebroidMorphism& f, const AlgebroidMorphism& g) {
  AlgebroidMorphism m;
  m.src = boxplus(f.src, g.src);
  m.tgt = boxplus(f.tgt, g.tgt);
  if (f.frame_images.size() != g.frame_images.size())
    throw std::invalid_argument("boxplus_morphism: frame image counts differ");
  for (std::size_t i = 0; i < f.frame_images.size(); ++i) {
    const auto& qi = f.frame_images[i];
    const auto& xi = g.frame_images[i];
    if (!(qi.vf == xi.vf))
      throw std::invalid_argument("boxplus_morphism: frame images have mismatched anchors");
    m.frame_images.push_back(make_element(m.tgt, qi.vf, qi.kr, qi.form + xi.form));
  }
  for (const auto& kr : f.kernel_images)
    m.kernel_images.push_back(make_element(m.tgt, kr.vf, kr.kr, kr.form));
  return m;
}

} // namespace forge
