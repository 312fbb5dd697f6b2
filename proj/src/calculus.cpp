#include "forge/calculus.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "forge/linsolve.hpp"

namespace forge {

VectorField::VectorField(RingPtr ring) : ring_(std::move(ring)) {
  comps_.assign(ring_->nvars(), LaurentPoly::zero(ring_));
}

VectorField::VectorField(RingPtr ring, std::vector<LaurentPoly> comps)
    : ring_(std::move(ring)), comps_(std::move(comps)) {
  if (comps_.size() != ring_->nvars())
    throw std::invalid_argument("vector field component count mismatch");
}

VectorField VectorField::coordinate(RingPtr ring, std::size_t i) {
  VectorField x(ring);
  x.comps_.at(i) = LaurentPoly::constant(x.ring_, 1);
  return x;
}

bool VectorField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

LaurentPoly VectorField::apply(const LaurentPoly& f) const {
  LaurentPoly r(ring_);
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    r += comps_[i] * f.derivative(i);
  }
  return r;
}

VectorField VectorField::operator-() const {
  VectorField r(ring_);
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = -comps_[i];
  return r;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

VectorField operator-(VectorField a, const VectorField& b) {
  for (std::size_t i = 0; i < a.comps_.size(); ++i) a.comps_[i] -= b.comps_[i];
  return a;
}

VectorField VectorField::scaled(const LaurentPoly& f) const {
  VectorField r(ring_);
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] * f;
  return r;
}

VectorField vf_bracket(const VectorField& x, const VectorField& y) {
  VectorField r(x.ring());
  for (std::size_t i = 0; i < x.components().size(); ++i)
    r.component(i) = x.apply(y.component(i)) - y.apply(x.component(i));
  return r;
}

// --- DiffForm -------------------------------------------------------------

DiffForm::DiffForm(RingPtr ring, int degree) : ring_(std::move(ring)), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative form degree");
}

DiffForm DiffForm::from_function(const LaurentPoly& f) {
  DiffForm a(f.ring(), 0);
  if (!f.is_zero()) a.terms_.emplace(FormIndex{}, f);
  return a;
}

DiffForm DiffForm::term(RingPtr ring, const std::vector<int>& idx, const LaurentPoly& c) {
  DiffForm a(ring, static_cast<int>(idx.size()));
  // Sort the tuple, tracking the permutation sign; a repeated index kills the term.
  std::vector<std::uint8_t> t;
  t.reserve(idx.size());
  for (int i : idx) {
    if (i < 0 || static_cast<std::size_t>(i) >= ring->nvars())
      throw std::invalid_argument("form index out of range");
    t.push_back(static_cast<std::uint8_t>(i));
  }
  int sign = 1;
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    for (std::size_t j = 0; j + 1 < t.size() - i; ++j)
      if (t[j] > t[j + 1]) { std::swap(t[j], t[j + 1]); sign = -sign; }
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == t[i + 1]) return a; // dx ^ dx = 0
  a.add_term(t, sign > 0 ? c : -c);
  return a;
}

LaurentPoly DiffForm::coefficient(const FormIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? LaurentPoly::zero(ring_) : it->second;
}

void DiffForm::add_term(FormIndex idx, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(idx.size()) != degree_)
    throw std::invalid_argument("form term degree mismatch");
  auto [it, inserted] = terms_.emplace(std::move(idx), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffForm DiffForm::operator-() const {
  DiffForm r(ring_, degree_);
  for (const auto& [i, c] : terms_) r.terms_.emplace(i, -c);
  return r;
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
  if (terms_.empty() && o.ring_ && !ring_) { ring_ = o.ring_; degree_ = o.degree_; }
  if (!o.terms_.empty()) {
    if (degree_ != o.degree_) throw std::invalid_argument("form degree mismatch in +");
    for (const auto& [i, c] : o.terms_) add_term(i, c);
  }
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) {
  if (terms_.empty() && o.ring_ && !ring_) { ring_ = o.ring_; degree_ = o.degree_; }
  if (!o.terms_.empty()) {
    if (degree_ != o.degree_) throw std::invalid_argument("form degree mismatch in -");
    for (const auto& [i, c] : o.terms_) add_term(i, -c);
  }
  return *this;
}

DiffForm DiffForm::scaled(const LaurentPoly& f) const {
  DiffForm r(ring_, degree_);
  for (const auto& [i, c] : terms_) r.add_term(i, c * f);
  return r;
}

DiffForm DiffForm::scaled(const Rational& c) const {
  DiffForm r(ring_, degree_);
  for (const auto& [i, k] : terms_) r.add_term(i, k * c);
  return r;
}

std::string DiffForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string basis;
    for (std::size_t p = 0; p < idx.size(); ++p) {
      if (p) basis += "^";
      basis += "d" + ring_->vars[idx[p]];
    }
    std::string coeff = c.str();
    bool needs_parens = coeff.find(" + ") != std::string::npos ||
                        coeff.find(" - ") != std::string::npos;
    if (basis.empty()) out << coeff;
    else if (needs_parens) out << "(" << coeff << ") " << basis;
    else out << coeff << " " << basis;
  }
  return out.str();
}

namespace {
// Sign of merging two individually sorted tuples: (-1)^{inversions across}.
int merge_sign(const FormIndex& a, const FormIndex& b) {
  long inv = 0;
  for (auto i : a)
    for (auto j : b)
      if (i > j) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

bool disjoint(const FormIndex& a, const FormIndex& b) {
  for (auto i : a)
    for (auto j : b)
      if (i == j) return false;
  return true;
}

FormIndex merged(const FormIndex& a, const FormIndex& b) {
  FormIndex m;
  m.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  return m;
}

// Position-based sign for inserting index u into sorted tuple idx.
int insert_sign(const FormIndex& idx, std::uint8_t u) {
  int p = 0;
  for (auto i : idx)
    if (i < u) ++p;
  return (p % 2 == 0) ? 1 : -1;
}
} // namespace

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  DiffForm r(a.ring() ? a.ring() : b.ring(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      if (!disjoint(ia, ib)) continue;
      int s = merge_sign(ia, ib);
      LaurentPoly c = ca * cb;
      r.add_term(merged(ia, ib), s > 0 ? c : -c);
    }
  return r;
}

DiffForm de_rham(const DiffForm& a) {
  DiffForm r(a.ring(), a.degree() + 1);
  if (!a.ring()) return r;
  std::size_t n = a.ring()->nvars();
  if (a.degree() + 1 > static_cast<int>(n)) return r;
  for (const auto& [idx, c] : a.terms()) {
    for (std::size_t u = 0; u < n; ++u) {
      if (std::find(idx.begin(), idx.end(), static_cast<std::uint8_t>(u)) != idx.end())
        continue;
      LaurentPoly dc = c.derivative(u);
      if (dc.is_zero()) continue;
      FormIndex ni(idx);
      ni.push_back(static_cast<std::uint8_t>(u));
      std::sort(ni.begin(), ni.end());
      int s = insert_sign(idx, static_cast<std::uint8_t>(u));
      r.add_term(ni, s > 0 ? dc : -dc);
    }
  }
  return r;
}

DiffForm de_rham(const LaurentPoly& f) { return de_rham(DiffForm::from_function(f)); }

DiffForm interior(const VectorField& x, const DiffForm& a) {
  if (a.degree() == 0) return DiffForm(a.ring(), 0); // convention: iota on functions is 0
  DiffForm r(a.ring(), a.degree() - 1);
  for (const auto& [idx, c] : a.terms()) {
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const LaurentPoly& comp = x.component(idx[p]);
      if (comp.is_zero()) continue;
      FormIndex ni;
      ni.reserve(idx.size() - 1);
      for (std::size_t q = 0; q < idx.size(); ++q)
        if (q != p) ni.push_back(idx[q]);
      LaurentPoly coeff = c * comp;
      r.add_term(ni, (p % 2 == 0) ? coeff : -coeff);
    }
  }
  return r;
}

DiffForm lie_derivative(const VectorField& x, const DiffForm& a) {
  if (a.degree() == 0) {
    LaurentPoly f = a.terms().empty() ? LaurentPoly::zero(a.ring())
                                      : a.terms().begin()->second;
    return DiffForm::from_function(x.apply(f));
  }
  return interior(x, de_rham(a)) + de_rham(interior(x, a));
}

PrimitiveResult find_primitive(const DiffForm& input) {
  if (input.degree() < 1)
    throw std::domain_error("find_primitive needs a form of degree >= 1");
  if (!de_rham(input).is_zero())
    throw std::domain_error("find_primitive: input form is not closed");

  const RingPtr& ring = input.ring();
  std::size_t n = ring->nvars();
  DiffForm P(ring, input.degree() - 1);
  DiffForm O(ring, input.degree());
  DiffForm R = input;

  for (std::size_t vi = n; vi-- > 0;) {
    auto v = static_cast<std::uint8_t>(vi);
    DiffForm Pv(ring, input.degree() - 1);
    DiffForm Ov(ring, input.degree());
    for (const auto& [idx, c] : R.terms()) {
      auto pos = std::find(idx.begin(), idx.end(), v);
      if (pos == idx.end()) continue;
      int p = static_cast<int>(pos - idx.begin());
      int s = (p % 2 == 0) ? 1 : -1; // dx_I = s * dx_v ^ dx_{I \ v}
      FormIndex rest;
      for (auto i : idx)
        if (i != v) rest.push_back(i);
      // Integrate the coefficient against x_v monomial by monomial.
      for (const auto& [m, coef] : c.terms()) {
        if (m[vi] == -1) {
          Ov.add_term(idx, LaurentPoly::monomial(ring, m, coef));
          continue;
        }
        Monomial mi(m);
        mi[vi] += 1;
        LaurentPoly anti = LaurentPoly::monomial(ring, mi, coef / Rational(m[vi] + 1));
        Pv.add_term(rest, s > 0 ? anti : -anti);
      }
    }
    R -= de_rham(Pv);
    R -= Ov;
    P += Pv;
    O += Ov;
  }
  // Any remainder the sweep could not account for joins the reported residue,
  // so exact() == true always implies d(primitive) == input on the nose.
  O += R;
  return PrimitiveResult{std::move(P), std::move(O)};
}

// --- RingMorphism ----------------------------------------------------------

RingMorphism RingMorphism::identity(const RingPtr& ring) {
  RingMorphism m{ring, ring, {}};
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    m.images.push_back(LaurentPoly::variable(ring, i));
  return m;
}

RingMorphism compose(const RingMorphism& outer, const RingMorphism& inner) {
  if (!same_ring(inner.dst, outer.src))
    throw std::invalid_argument("compose: substitution targets do not chain");
  RingMorphism m{inner.src, outer.dst, {}};
  for (const auto& im : inner.images) m.images.push_back(outer.map(im));
  return m;
}

DiffForm RingMorphism::map(const DiffForm& a) const {
  DiffForm r(dst, a.degree());
  for (const auto& [idx, c] : a.terms()) {
    DiffForm acc = DiffForm::from_function(map(c));
    for (auto i : idx) acc = wedge(acc, de_rham(images[i]));
    r += acc;
  }
  return r;
}

namespace {
LaurentPoly det(const std::vector<std::vector<LaurentPoly>>& m, const RingPtr& ring) {
  std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(ring, 1);
  if (n == 1) return m[0][0];
  LaurentPoly d(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    LaurentPoly t = m[0][j] * det(sub, ring);
    d += (j % 2 == 0) ? t : -t;
  }
  return d;
}
} // namespace

std::vector<DiffForm> monomial_form_basis(const RingPtr& ring, int degree, int window) {
  const std::size_t n = ring->nvars();
  std::vector<DiffForm> basis;
  if (degree < 0 || degree > static_cast<int>(n)) return basis;
  std::vector<FormIndex> tuples;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != degree) continue;
    FormIndex idx;
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (1u << v)) idx.push_back(static_cast<std::uint8_t>(v));
    tuples.push_back(std::move(idx));
  }
  std::vector<std::int32_t> lo(n), hi(n, window);
  for (std::size_t v = 0; v < n; ++v)
    lo[v] = ring->inverted[v] ? -window : 0;
  Monomial mono(n);
  for (const auto& idx : tuples) {
    for (std::size_t v = 0; v < n; ++v) mono[v] = lo[v];
    while (true) {
      DiffForm b(ring, degree);
      b.add_term(idx, LaurentPoly::monomial(ring, mono, Rational(1)));
      basis.push_back(std::move(b));
      std::size_t v = 0;
      while (v < n && mono[v] == hi[v]) mono[v] = lo[v], ++v;
      if (v == n) break;
      ++mono[v];
    }
  }
  return basis;
}

std::optional<DiffForm> solve_de_rham(const DiffForm& target, int window) {
  const RingPtr& R = target.ring();
  const int k = target.degree();
  if (k < 1) return std::nullopt;
  if (target.is_zero()) return DiffForm(R, k - 1);

  // Unknown basis: every (k-1)-index tuple paired with every monomial in the
  // exponent box.  The exterior derivative of each basis form is scattered
  // into rows keyed by (index tuple, monomial) of the degree-k result.
  const std::vector<DiffForm> basis = monomial_form_basis(R, k - 1, window);

  using RowKey = std::pair<FormIndex, Monomial>;
  std::map<RowKey, std::map<std::size_t, Rational>> rows;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const DiffForm db = de_rham(basis[j]);
    for (const auto& [idx, coeff] : db.terms())
      for (const auto& [m, c] : coeff.terms()) rows[{idx, m}][j] = c;
  }
  for (const auto& [idx, coeff] : target.terms())
    for (const auto& [m, c] : coeff.terms()) rows[{idx, m}]; // ensure the row exists

  ExactSolver solver;
  for (const auto& [key, cols] : rows) {
    const LaurentPoly tcoeff = target.coefficient(key.first);
    const auto it = tcoeff.terms().find(key.second);
    solver.add_row(cols, it == tcoeff.terms().end() ? Rational(0) : it->second);
  }
  const auto sol = solver.particular(basis.size());
  if (!sol) return std::nullopt;
  DiffForm eta(R, k - 1);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if ((*sol)[j] != 0) eta += basis[j].scaled((*sol)[j]);
  if (!(de_rham(eta) == target))
    throw std::logic_error("bounded primitive solver produced a non-solution");
  return eta;
}

VectorField RingMorphism::map(const VectorField& x) const {
  std::size_t n = src->nvars();
  if (dst->nvars() != n)
    throw std::domain_error("vector field transport needs equal variable counts");
  // Solve J^T Y = sigma(X) where J_{ij} = d(images[i])/d(u_j): the transported
  // field satisfies Y(sigma(f)) = sigma(X(f)) for every f in the source ring.
  std::vector<std::vector<LaurentPoly>> jt(n, std::vector<LaurentPoly>(n, LaurentPoly::zero(dst)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      jt[j][i] = images[i].derivative(j);
  LaurentPoly d = det(jt, dst);
  LaurentPoly dinv = d.term_inverse(); // throws unless det is a unit monomial
  std::vector<LaurentPoly> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(map(x.component(i)));
  VectorField y(dst);
  for (std::size_t j = 0; j < n; ++j) {
    // Cramer: Y_j = det(J^T with column j replaced by b) / det.
    std::vector<std::vector<LaurentPoly>> m = jt;
    for (std::size_t r = 0; r < n; ++r) m[r][j] = b[r];
    y.component(j) = det(m, dst) * dinv;
  }
  return y;
}

} // namespace forge
