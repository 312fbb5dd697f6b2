#include "forge/sampling.hpp"

namespace forge {

LaurentPoly random_poly(Rng& rng, const RingPtr& ring, int terms) {
  LaurentPoly p(ring);
  std::size_t n = ring->nvars();
  int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(terms)));
  for (int t = 0; t < count; ++t) {
    Monomial m(n, 0);
    long total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      int lo = ring->inverted[i] ? -2 : 0;
      int e = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(2 - lo + 1)));
      if (total + (e > 0 ? e : 0) > 2) e = 0; // keep total degree <= 2
      m[i] = e;
      if (e > 0) total += e;
    }
    p.add_term(m, rng.small_rational());
  }
  return p;
}

AlgebroidElement random_element(Rng& rng, const StructurePtr& s) {
  AlgebroidElement e = zero_element(s);
  for (auto& c : e.vf)
    if (rng.below(4) != 0) c = random_poly(rng, s->ring, 2);
  for (auto& c : e.kr)
    if (rng.below(3) != 0) c = random_poly(rng, s->ring, 2);
  if (s->kind != AlgebroidKind::Lie) {
    for (std::size_t i = 0; i < s->ring->nvars(); ++i)
      if (rng.below(3) == 0)
        e.form += DiffForm::term(s->ring, {static_cast<int>(i)},
                                 random_poly(rng, s->ring, 2));
  }
  return e;
}

SampleSet default_samples(const StructurePtr& s, std::uint64_t seed) {
  SampleSet set;
  set.seed = seed;
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x243f6a8885a308d3ull);
  const RingPtr& ring = s->ring;
  std::size_t n = ring->nvars();
  std::size_t F = s->frame.size();
  std::size_t M = s->kernel.dim();

  // Function samples: 1, the coordinates, a few quadratics, an inverted
  // coordinate if the ring has one, plus two seeded random polynomials.
  set.funcs.push_back(LaurentPoly::constant(ring, 1));
  for (std::size_t i = 0; i < n; ++i) set.funcs.push_back(LaurentPoly::variable(ring, i));
  set.funcs.push_back(LaurentPoly::variable(ring, 0, 2));
  if (n > 1) {
    LaurentPoly xy = LaurentPoly::variable(ring, 0) * LaurentPoly::variable(ring, 1);
    set.funcs.push_back(xy);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (ring->inverted[i]) {
      set.funcs.push_back(LaurentPoly::variable(ring, i, -1));
      break;
    }
  set.funcs.push_back(random_poly(rng, ring));
  set.funcs.push_back(random_poly(rng, ring));

  // Base elements: frame, kernel generators, d(coordinates), and a bounded
  // family of coordinate multiples of frame/kernel generators.
  for (std::size_t i = 0; i < F; ++i) set.elems.push_back(frame_element(s, i));
  for (std::size_t r = 0; r < M; ++r) set.elems.push_back(kernel_element(s, r));
  if (s->kind != AlgebroidKind::Lie)
    for (std::size_t i = 0; i < n && i < 3; ++i)
      set.elems.push_back(d_op(s, LaurentPoly::variable(ring, i)));
  for (std::size_t i = 0; i < F && i < 3; ++i) {
    AlgebroidElement e = frame_element(s, i);
    e.vf[i] = LaurentPoly::variable(ring, i % n);
    set.elems.push_back(e);
  }
  for (std::size_t r = 0; r < M && r < 2; ++r) {
    AlgebroidElement e = kernel_element(s, r);
    e.kr[r] = LaurentPoly::variable(ring, r % n);
    set.elems.push_back(e);
  }
  // A mixed element exercising every slot at once.
  {
    AlgebroidElement e = zero_element(s);
    e.vf[0] = LaurentPoly::variable(ring, 0, 2);
    if (M > 0) e.kr[0] = LaurentPoly::variable(ring, n > 1 ? 1 : 0);
    if (s->kind != AlgebroidKind::Lie)
      e.form = DiffForm::term(ring, {0}, LaurentPoly::variable(ring, 0));
    set.elems.push_back(e);
  }
  set.base_count = set.elems.size();
  // Seeded pseudorandom elements of coefficient degree <= 2.
  for (int t = 0; t < 25; ++t) set.elems.push_back(random_element(rng, s));
  return set;
}

} // namespace forge
