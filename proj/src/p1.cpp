#include "forge/p1.hpp"

#include <array>
#include <map>
#include <tuple>

#include "forge/linsolve.hpp"

namespace forge {

namespace {

// The gluing morphism in either direction.  `u` is the image in the overlap
// ring of the source chart's coordinate as seen from the target chart (x for
// over1 -> over0, 1/x for over0 -> over1), `u_inv` its inverse and `du` its
// differential.  Both directions are the same formula:
//
//   tau_src |-> -u^2 . tau_tgt + u . lam + (k/2 - 4) du,
//   lam     |-> lam + k u^-1 du.
AlgebroidMorphism p1_gluing(const StructurePtr& src, const StructurePtr& tgt,
                            bool has_kernel, const Rational& k,
                            const LaurentPoly& u, const LaurentPoly& u_inv,
                            const DiffForm& du) {
  AlgebroidMorphism m;
  m.src = src;
  m.tgt = tgt;

  AlgebroidElement frame_img = zero_element(tgt);
  frame_img.vf[0] = -(u * u);
  frame_img.form = du.scaled(k / 2 - 4);
  if (has_kernel) {
    frame_img.kr[0] = u;
    AlgebroidElement kernel_img = kernel_element(tgt, 0);
    kernel_img.form = du.scaled(u_inv).scaled(k);
    m.kernel_images.push_back(std::move(kernel_img));
  }
  m.frame_images.push_back(std::move(frame_img));
  return m;
}

P1Family build_family(const Rational& k, bool has_kernel) {
  P1Family fam;
  fam.k = has_kernel ? k : Rational(0);
  fam.has_kernel = has_kernel;

  RingPtr r0 = make_ring({"x"});
  RingPtr r1 = make_ring({"y"});
  RingPtr rov = make_ring({"x"}, {"x"});
  const LaurentPoly xo = LaurentPoly::variable(rov, 0);
  const LaurentPoly xo_inv = LaurentPoly::variable(rov, 0, -1);

  Overlap ov;
  ov.ring = rov;
  ov.from_first = RingMorphism{r0, rov, {xo}};
  ov.from_second = RingMorphism{r1, rov, {xo_inv}};
  fam.cov.charts = {r0, r1};
  fam.cov.pairs[{0, 1}] = ov;
  fam.cov.validate();

  if (has_kernel) {
    fam.chart0 = make_tcdo_chart(r0, {DiffForm(r0, 2)}, {{k}}, DiffForm(r0, 3));
    fam.chart1 = make_tcdo_chart(r1, {DiffForm(r1, 2)}, {{k}}, DiffForm(r1, 3));
  } else {
    fam.chart0 = make_cdo(r0);
    fam.chart1 = make_cdo(r1);
  }
  fam.over0 = restrict_structure(fam.chart0, ov.from_first);
  fam.over1 = restrict_structure(fam.chart1, ov.from_second);

  const DiffForm dxo = DiffForm::term(rov, {0}, LaurentPoly::constant(rov, 1));
  const DiffForm dxo_inv = dxo.scaled(-(xo_inv * xo_inv)); // d(1/x) = -x^-2 dx
  fam.gluing = p1_gluing(fam.over1, fam.over0, has_kernel, fam.k, xo, xo_inv, dxo);
  fam.gluing_inverse =
      p1_gluing(fam.over0, fam.over1, has_kernel, fam.k, xo_inv, xo, dxo_inv);
  return fam;
}

} // namespace

P1Family p1_cdo_family() { return build_family(0, false); }

P1Family p1_deformed_family(const Rational& k) { return build_family(k, true); }

Sl2Sections p1_sl2_embedding(const P1Family& fam) {
  const StructurePtr& s = fam.chart0;
  const RingPtr& R = s->ring;
  const LaurentPoly x = LaurentPoly::variable(R, 0);
  Sl2Sections t{zero_element(s), zero_element(s), zero_element(s)};
  t.e.vf[0] = LaurentPoly::constant(R, 1);
  t.h.vf[0] = x * Rational(-2);
  t.f.vf[0] = -(x * x);
  t.f.form = DiffForm::term(R, {0}, LaurentPoly::constant(R, fam.k / 2 - 4));
  if (fam.has_kernel) {
    t.h.kr[0] = LaurentPoly::constant(R, 1);
    t.f.kr[0] = x;
  }
  return t;
}

Sl2Sections p1_sl2_chart1(const P1Family& fam) {
  const StructurePtr& s = fam.chart1;
  const RingPtr& R = s->ring;
  const LaurentPoly y = LaurentPoly::variable(R, 0);
  Sl2Sections t{zero_element(s), zero_element(s), zero_element(s)};
  t.f.vf[0] = LaurentPoly::constant(R, 1);
  t.h.vf[0] = y * Rational(2);
  t.e.vf[0] = -(y * y);
  t.e.form = DiffForm::term(R, {0}, LaurentPoly::constant(R, fam.k / 2 - 4));
  if (fam.has_kernel) {
    t.h.kr[0] = LaurentPoly::constant(R, -1);
    t.e.kr[0] = y;
  }
  return t;
}

Rational p1_sl2_level(const P1Family& fam) {
  const Sl2Sections t = p1_sl2_embedding(fam);
  const LaurentPoly ef = one_pairing(t.e, t.f);
  const LaurentPoly hh = one_pairing(t.h, t.h);
  if (!ef.is_constant() || !(hh == ef * Rational(2)))
    throw std::logic_error("embedded sl2 pairings do not form an affine level");
  return ef.constant_value();
}

AxiomReport check_p1_sl2(const P1Family& fam) {
  AxiomReport rep;
  const Sl2Sections t0 = p1_sl2_embedding(fam);
  const Sl2Sections t1 = p1_sl2_chart1(fam);
  struct Chart {
    const Sl2Sections* t;
    StructurePtr s;
    const char* where;
  };
  const std::array<Chart, 2> charts{{{&t0, fam.chart0, "chart 0"},
                                     {&t1, fam.chart1, "chart 1"}}};

  auto line = [&rep](const char* name) -> CheckLine& {
    rep.lines.push_back({name, true, {}});
    return rep.lines.back();
  };
  auto fail = [](CheckLine& l, const std::string& d) {
    if (l.pass) {
      l.pass = false;
      l.detail = d;
    }
  };

  {
    CheckLine& l = line("bracket-h-e");
    for (const Chart& c : charts)
      if (!(zero_product(c.t->h, c.t->e) == scale(2, c.t->e)))
        fail(l, std::string("[h,e] != 2e on ") + c.where);
  }
  {
    CheckLine& l = line("bracket-h-f");
    for (const Chart& c : charts)
      if (!(zero_product(c.t->h, c.t->f) == scale(-2, c.t->f)))
        fail(l, std::string("[h,f] != -2f on ") + c.where);
  }
  {
    CheckLine& l = line("bracket-e-f");
    for (const Chart& c : charts)
      if (!(zero_product(c.t->e, c.t->f) == c.t->h))
        fail(l, std::string("[e,f] != h on ") + c.where);
  }
  {
    // Vertex 0-products are skew only up to d of the 1-pairing.
    CheckLine& l = line("bracket-mirror");
    for (const Chart& c : charts) {
      const std::array<std::pair<const AlgebroidElement*, const AlgebroidElement*>, 3>
          prs{{{&c.t->e, &c.t->h}, {&c.t->f, &c.t->h}, {&c.t->e, &c.t->f}}};
      for (const auto& [x, y] : prs)
        if (!(zero_product(*x, *y) + zero_product(*y, *x) ==
              d_op(c.s, one_pairing(*x, *y))))
          fail(l, std::string("[x,y] + [y,x] != d<x,y> on ") + c.where);
    }
  }
  {
    CheckLine& l = line("bracket-diagonal");
    for (const Chart& c : charts)
      for (const AlgebroidElement* x : {&c.t->e, &c.t->h, &c.t->f})
        if (!(zero_product(*x, *x) ==
              scale(Rational(1, 2), d_op(c.s, one_pairing(*x, *x)))))
          fail(l, std::string("[x,x] != (1/2) d<x,x> on ") + c.where);
  }
  {
    CheckLine& l = line("pairing-e-f");
    const LaurentPoly ef0 = one_pairing(t0.e, t0.f);
    const LaurentPoly ef1 = one_pairing(t1.e, t1.f);
    if (!ef0.is_constant() || !ef1.is_constant())
      fail(l, "<e,f> is not constant");
    else if (ef0.constant_value() != ef1.constant_value())
      fail(l, "<e,f> differs between the charts");
  }
  {
    CheckLine& l = line("pairing-h-h");
    for (const Chart& c : charts)
      if (!(one_pairing(c.t->h, c.t->h) ==
            one_pairing(c.t->e, c.t->f) * Rational(2)))
        fail(l, std::string("<h,h> != 2<e,f> on ") + c.where);
  }
  {
    CheckLine& l = line("pairing-off-diagonal");
    for (const Chart& c : charts) {
      const std::array<std::pair<const AlgebroidElement*, const AlgebroidElement*>, 4>
          prs{{{&c.t->e, &c.t->h}, {&c.t->f, &c.t->h}, {&c.t->e, &c.t->e},
               {&c.t->f, &c.t->f}}};
      for (const auto& [x, y] : prs)
        if (!one_pairing(*x, *y).is_zero() || !one_pairing(*y, *x).is_zero())
          fail(l, std::string("unexpected nonzero pairing on ") + c.where);
    }
  }
  {
    const Overlap& ov = fam.cov.pair(0, 1);
    const std::array<std::tuple<const char*, const AlgebroidElement*,
                                const AlgebroidElement*>, 3>
        currents{{{"gluing-e", &t0.e, &t1.e},
                  {"gluing-h", &t0.h, &t1.h},
                  {"gluing-f", &t0.f, &t1.f}}};
    for (const auto& [name, c0, c1] : currents) {
      CheckLine& l = line(name);
      const AlgebroidElement lhs = restrict_element(*c0, ov.from_first, fam.over0);
      const AlgebroidElement rhs =
          fam.gluing.apply(restrict_element(*c1, ov.from_second, fam.over1));
      if (!(lhs == rhs)) fail(l, "chart expressions disagree through the gluing");
    }
  }
  return rep;
}

namespace {

// Monomial ansatz for one chart: x^d against the frame, each kernel
// generator, and dx, for 0 <= d <= degree_bound.
std::vector<AlgebroidElement> ansatz_basis(const StructurePtr& chart, int D) {
  std::vector<AlgebroidElement> out;
  const RingPtr& R = chart->ring;
  for (int d = 0; d <= D; ++d) {
    AlgebroidElement b = zero_element(chart);
    b.vf[0] = LaurentPoly::variable(R, 0, d);
    out.push_back(std::move(b));
  }
  for (std::size_t r = 0; r < chart->kernel.dim(); ++r)
    for (int d = 0; d <= D; ++d) {
      AlgebroidElement b = zero_element(chart);
      b.kr[r] = LaurentPoly::variable(R, 0, d);
      out.push_back(std::move(b));
    }
  for (int d = 0; d <= D; ++d) {
    AlgebroidElement b = zero_element(chart);
    b.form = DiffForm::term(R, {0}, LaurentPoly::variable(R, 0, d));
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<std::pair<AlgebroidElement, AlgebroidElement>>
solve_sections(const P1Family& fam, int D) {
  const Overlap& ov = fam.cov.pair(0, 1);
  const std::vector<AlgebroidElement> b0 = ansatz_basis(fam.chart0, D);
  const std::vector<AlgebroidElement> b1 = ansatz_basis(fam.chart1, D);
  const std::size_t n0 = b0.size();
  const std::size_t ncols = n0 + b1.size();

  auto image0 = [&](const AlgebroidElement& s) {
    return restrict_element(s, ov.from_first, fam.over0);
  };
  auto image1 = [&](const AlgebroidElement& s) {
    return fam.gluing.apply(restrict_element(s, ov.from_second, fam.over1));
  };

  // Rows are keyed by (slot kind, slot index, exponent) over the overlap
  // ring; the equation is image0(s0) - image1(s1) = 0 slot by slot.
  using RowKey = std::tuple<int, std::size_t, std::int32_t>;
  std::map<RowKey, ExactSolver::Row> rows;
  auto scatter = [&rows](std::size_t col, const AlgebroidElement& E, int sgn) {
    auto put = [&](int kind, std::size_t idx, const LaurentPoly& p) {
      for (const auto& [m, cf] : p.terms())
        rows[{kind, idx, m[0]}][col] += sgn > 0 ? cf : -cf;
    };
    for (std::size_t a = 0; a < E.vf.size(); ++a) put(0, a, E.vf[a]);
    for (std::size_t r = 0; r < E.kr.size(); ++r) put(1, r, E.kr[r]);
    for (const auto& [idx, p] : E.form.terms())
      put(2, static_cast<std::size_t>(idx[0]), p);
  };
  for (std::size_t j = 0; j < b0.size(); ++j) scatter(j, image0(b0[j]), +1);
  for (std::size_t j = 0; j < b1.size(); ++j) scatter(n0 + j, image1(b1[j]), -1);

  ExactSolver solver;
  for (auto& [key, row] : rows) {
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    if (!row.empty()) solver.add_row(std::move(row), 0);
  }

  std::vector<std::pair<AlgebroidElement, AlgebroidElement>> out;
  for (const std::vector<Rational>& vec : solver.nullspace(ncols)) {
    AlgebroidElement s0 = zero_element(fam.chart0);
    AlgebroidElement s1 = zero_element(fam.chart1);
    for (std::size_t j = 0; j < b0.size(); ++j)
      if (vec[j] != 0) s0 += scale(vec[j], b0[j]);
    for (std::size_t j = 0; j < b1.size(); ++j)
      if (vec[n0 + j] != 0) s1 += scale(vec[n0 + j], b1[j]);
    if (!(image0(s0) == image1(s1)))
      throw std::logic_error("global-section solver produced a non-solution");
    out.emplace_back(std::move(s0), std::move(s1));
  }
  return out;
}

} // namespace

GlobalSections p1_global_sections(const P1Family& fam, int degree_bound) {
  if (degree_bound < 0)
    throw std::invalid_argument("p1_global_sections: negative degree bound");
  auto base = solve_sections(fam, degree_bound);
  const auto widened = solve_sections(fam, degree_bound + 2);
  if (base.size() != widened.size())
    throw AnsatzTooSmall("global sections still growing between degree " +
                         std::to_string(degree_bound) + " and " +
                         std::to_string(degree_bound + 2) +
                         "; raise the degree bound");
  GlobalSections out;
  out.degree_bound = degree_bound;
  out.basis = std::move(base);
  return out;
}

} // namespace forge
