#include "forge/cover.hpp"

#include <stdexcept>

namespace forge {

namespace {

void require_chain(const RingMorphism& m, const RingPtr& src, const RingPtr& dst,
                   const char* what) {
  if (!same_ring(m.src, src) || !same_ring(m.dst, dst))
    throw std::invalid_argument(std::string("cover: ") + what +
                                " substitution endpoints do not match");
  if (m.images.size() != src->nvars())
    throw std::invalid_argument(std::string("cover: ") + what +
                                " substitution has the wrong arity");
}

bool same_morphism(const RingMorphism& a, const RingMorphism& b) {
  return a.images == b.images;
}

} // namespace

const Overlap& Cover::pair(std::size_t i, std::size_t j) const {
  auto it = pairs.find({i, j});
  if (it == pairs.end()) throw std::out_of_range("cover: no such overlap pair");
  return it->second;
}

void Cover::validate() const {
  for (const auto& [key, ov] : pairs) {
    const auto [i, j] = key;
    if (!(i < j) || j >= charts.size())
      throw std::invalid_argument("cover: overlap key out of order or range");
    require_chain(ov.from_first, charts[i], ov.ring, "overlap");
    require_chain(ov.from_second, charts[j], ov.ring, "overlap");
  }
  for (const auto& [key, tr] : triples) {
    const auto [i, j, k] = key;
    if (!(i < j && j < k) || k >= charts.size())
      throw std::invalid_argument("cover: triple key out of order or range");
    const Overlap& oij = pair(i, j);
    const Overlap& oik = pair(i, k);
    const Overlap& ojk = pair(j, k);
    require_chain(tr.from_01, oij.ring, tr.ring, "triple");
    require_chain(tr.from_02, oik.ring, tr.ring, "triple");
    require_chain(tr.from_12, ojk.ring, tr.ring, "triple");
    // Each chart must reach the triple ring by one substitution, whichever
    // pair overlap it goes through.
    if (!same_morphism(compose(tr.from_01, oij.from_first), compose(tr.from_02, oik.from_first)))
      throw std::invalid_argument("cover: chart routes into triple disagree (first chart)");
    if (!same_morphism(compose(tr.from_01, oij.from_second), compose(tr.from_12, ojk.from_first)))
      throw std::invalid_argument("cover: chart routes into triple disagree (middle chart)");
    if (!same_morphism(compose(tr.from_02, oik.from_second), compose(tr.from_12, ojk.from_second)))
      throw std::invalid_argument("cover: chart routes into triple disagree (last chart)");
  }
}

Cover identity_cover(const RingPtr& ring, std::size_t ncharts) {
  Cover c;
  c.charts.assign(ncharts, ring);
  const RingMorphism id = RingMorphism::identity(ring);
  for (std::size_t i = 0; i < ncharts; ++i)
    for (std::size_t j = i + 1; j < ncharts; ++j) c.pairs[{i, j}] = Overlap{ring, id, id};
  for (std::size_t i = 0; i < ncharts; ++i)
    for (std::size_t j = i + 1; j < ncharts; ++j)
      for (std::size_t k = j + 1; k < ncharts; ++k)
        c.triples[{i, j, k}] = TripleOverlap{ring, id, id, id};
  c.validate();
  return c;
}

StructurePtr restrict_structure(const StructurePtr& s, const RingMorphism& r) {
  if (!same_ring(s->ring, r.src))
    throw std::invalid_argument("restrict_structure: substitution does not start at the chart ring");
  AlgebroidStructure t;
  t.ring = r.dst;
  t.kind = s->kind;
  for (const auto& f : s->frame) t.frame.push_back(r.map(f));
  t.kernel = s->kernel;
  for (const auto& c : s->curvature) t.curvature.push_back(r.map(c));
  t.alpha = r.map(s->alpha);
  return make_structure(std::move(t));
}

AlgebroidElement restrict_element(const AlgebroidElement& e, const RingMorphism& r,
                                  const StructurePtr& target) {
  std::vector<LaurentPoly> vf, kr;
  vf.reserve(e.vf.size());
  kr.reserve(e.kr.size());
  for (const auto& f : e.vf) vf.push_back(r.map(f));
  for (const auto& h : e.kr) kr.push_back(r.map(h));
  return make_element(target, std::move(vf), std::move(kr), r.map(e.form));
}

DiffForm g_pair_wedge(const KernelAlgebra& k, const std::vector<DiffForm>& P,
                      const std::vector<DiffForm>& Q) {
  if (P.size() != k.dim() || Q.size() != k.dim())
    throw std::invalid_argument("g_pair_wedge: one form per kernel generator required");
  if (k.dim() == 0) throw std::invalid_argument("g_pair_wedge: empty kernel");
  DiffForm out(P[0].ring(), P[0].degree() + Q[0].degree());
  for (std::size_t r = 0; r < k.dim(); ++r)
    for (std::size_t s = 0; s < k.dim(); ++s) {
      if (k.pairing[r][s] == 0) continue;
      out += wedge(P[r], Q[s]).scaled(k.pairing[r][s] / Rational(2));
    }
  return out;
}

} // namespace forge
