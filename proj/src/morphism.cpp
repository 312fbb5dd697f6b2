#include "forge/morphism.hpp"

#include <stdexcept>

#include "forge/sampling.hpp"

namespace forge {

namespace {

void require_same_ring(const StructurePtr& a, const StructurePtr& b, const char* what) {
  if (!same_ring(a->ring, b->ring))
    throw std::invalid_argument(std::string(what) + ": structures live on different rings");
}

} // namespace

AlgebroidElement AlgebroidMorphism::apply(const AlgebroidElement& e) const {
  AlgebroidElement out = zero_element(tgt);
  for (std::size_t i = 0; i < e.vf.size(); ++i)
    if (!e.vf[i].is_zero()) out += minus_one(e.vf[i], frame_images[i]);
  for (std::size_t r = 0; r < e.kr.size(); ++r)
    if (!e.kr[r].is_zero()) out += minus_one(e.kr[r], kernel_images[r]);
  out.form += e.form;
  return out;
}

AlgebroidMorphism identity_morphism(const StructurePtr& s) {
  AlgebroidMorphism m;
  m.src = s;
  m.tgt = s;
  for (std::size_t i = 0; i < s->frame.size(); ++i)
    m.frame_images.push_back(frame_element(s, i));
  for (std::size_t r = 0; r < s->kernel.dim(); ++r)
    m.kernel_images.push_back(kernel_element(s, r));
  return m;
}

AlgebroidMorphism compose(const AlgebroidMorphism& g, const AlgebroidMorphism& f) {
  if (!(*f.tgt == *g.src))
    throw std::invalid_argument("compose: inner structures do not match");
  AlgebroidMorphism m;
  m.src = f.src;
  m.tgt = g.tgt;
  for (const auto& im : f.frame_images) m.frame_images.push_back(g.apply(im));
  for (const auto& im : f.kernel_images) m.kernel_images.push_back(g.apply(im));
  return m;
}

AxiomReport check_morphism(const AlgebroidMorphism& m, const SampleSet& set) {
  require_same_ring(m.src, m.tgt, "check_morphism");
  if (m.src->kind != m.tgt->kind)
    throw std::invalid_argument("check_morphism: mixed flavours");
  if (m.frame_images.size() != m.src->frame.size() ||
      m.kernel_images.size() != m.src->kernel.dim())
    throw std::invalid_argument("check_morphism: image count mismatch");

  const bool has_forms = m.src->kind != AlgebroidKind::Lie;
  const auto& es = set.elems;
  const auto& fs = set.funcs;
  AxiomReport rep;
  auto line = [&rep](const std::string& name, bool ok, const std::string& detail) {
    rep.lines.push_back({name, ok, ok ? "" : detail});
  };

  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < m.frame_images.size() && ok; ++i)
      if (!(anchor(m.frame_images[i]) == m.src->frame[i])) {
        ok = false;
        detail = "frame field " + std::to_string(i);
      }
    for (std::size_t r = 0; r < m.kernel_images.size() && ok; ++r)
      if (!anchor(m.kernel_images[r]).is_zero()) {
        ok = false;
        detail = "kernel image " + std::to_string(r) + " has nonzero anchor";
      }
    line("anchor-compat", ok, detail);
  }

  if (has_forms) {
    bool ok = true;
    std::string detail;
    for (const auto& f : fs) {
      if (!(m.apply(d_op(m.src, f)) == d_op(m.tgt, f))) {
        ok = false;
        detail = "f=" + f.str();
        break;
      }
    }
    line("d-compat", ok, detail);
  }

  // pair enumeration: exhaustive on the base prefix, then the seeded budget
  const std::size_t nb = std::min(set.base_count, es.size());
  Rng rng(set.seed ^ 0x7f4a7c15ull);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) pairs.emplace_back(i, j);
  for (std::size_t t = 0; t < set.pair_budget && !es.empty(); ++t)
    pairs.emplace_back(rng.below(es.size()), rng.below(es.size()));

  std::vector<AlgebroidElement> images;
  images.reserve(es.size());
  for (const auto& e : es) images.push_back(m.apply(e));

  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < es.size() && ok; ++i)
      for (const auto& f : fs)
        if (!(m.apply(minus_one(f, es[i])) == minus_one(f, images[i]))) {
          ok = false;
          detail = "x=" + es[i].str_repr() + ", f=" + f.str();
          break;
        }
    line("module-compat", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (const auto& [i, j] : pairs)
      if (!(m.apply(zero_product(es[i], es[j])) == zero_product(images[i], images[j]))) {
        ok = false;
        detail = "x=" + es[i].str_repr() + ", y=" + es[j].str_repr();
        break;
      }
    line("product-compat", ok, detail);
  }
  if (has_forms) {
    bool ok = true;
    std::string detail;
    for (const auto& [i, j] : pairs)
      if (!(one_pairing(es[i], es[j]) == one_pairing(images[i], images[j]))) {
        ok = false;
        detail = "x=" + es[i].str_repr() + ", y=" + es[j].str_repr();
        break;
      }
    line("pairing-compat", ok, detail);
  }
  return rep;
}

StructurePtr twist(const StructurePtr& s, const DiffForm& gamma) {
  if (s->kind == AlgebroidKind::Lie)
    throw std::domain_error("the Lie flavour carries no 3-form slot to twist");
  if (gamma.degree() != 3 && !gamma.is_zero())
    throw std::domain_error("twist form must have degree 3");
  if (!de_rham(gamma).is_zero())
    throw std::domain_error("twist 3-form is not closed");
  AlgebroidStructure t = *s;
  t.alpha += gamma;
  return make_structure(std::move(t));
}

AlgebroidMorphism exp_beta(const StructurePtr& s, const DiffForm& beta) {
  if (s->kind == AlgebroidKind::Lie)
    throw std::domain_error("gauge transformations need the form slot");
  if (beta.degree() != 2 && !beta.is_zero())
    throw std::domain_error("gauge form must have degree 2");
  AlgebroidMorphism m;
  m.src = s;
  m.tgt = twist(s, -de_rham(beta));
  for (std::size_t i = 0; i < s->frame.size(); ++i)
    m.frame_images.push_back(frame_element(m.tgt, i) +
                             form_element(m.tgt, interior(s->frame[i], beta)));
  for (std::size_t r = 0; r < s->kernel.dim(); ++r)
    m.kernel_images.push_back(kernel_element(m.tgt, r));
  return m;
}

AlgebroidMorphism transport_twist(const AlgebroidMorphism& m, const DiffForm& gamma) {
  AlgebroidMorphism out;
  out.src = twist(m.src, gamma);
  out.tgt = twist(m.tgt, gamma);
  for (const AlgebroidElement& e : m.frame_images)
    out.frame_images.push_back(make_element(out.tgt, e.vf, e.kr, e.form));
  for (const AlgebroidElement& e : m.kernel_images)
    out.kernel_images.push_back(make_element(out.tgt, e.vf, e.kr, e.form));
  return out;
}

TwistEquivalence twist_equivalence(const StructurePtr& d1, const StructurePtr& d2,
                                   int degree_window) {
  require_same_ring(d1, d2, "twist_equivalence");
  TwistEquivalence out;
  out.primitive = DiffForm(d1->ring, 2);
  {
    AlgebroidStructure a = *d1, b = *d2;
    b.alpha = a.alpha;
    if (!(a == b)) {
      out.note = "structures differ beyond the 3-form slot";
      return out;
    }
  }
  const DiffForm delta = d1->alpha - d2->alpha; // want d beta = delta
  if (!de_rham(delta).is_zero()) {
    out.note = "twist difference is not closed";
    return out;
  }

  std::optional<DiffForm> beta;
  const PrimitiveResult pr = find_primitive(delta);
  if (pr.exact()) {
    beta = pr.primitive;
    out.note = "primitive found by term integration";
  } else if (auto solved = solve_de_rham(delta, degree_window)) {
    beta = *solved;
    out.note = "primitive found by bounded ansatz (window " +
               std::to_string(degree_window) + ")";
  } else {
    out.note = "no primitive within exponent window " + std::to_string(degree_window) +
               "; equivalence undecided";
    return out;
  }

  AlgebroidMorphism w = exp_beta(d1, *beta);
  if (!(*w.tgt == *d2))
    throw std::logic_error("gauge witness landed on the wrong structure");
  out.equivalent = true;
  out.witness = std::move(w);
  out.primitive = *beta;
  return out;
}

} // namespace forge
