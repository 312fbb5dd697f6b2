#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forge/laurent.hpp"

namespace forge {

// Polynomial vector field: components against the coordinate frame d/dx_i.
class VectorField {
public:
  VectorField() = default;
  explicit VectorField(RingPtr ring);
  VectorField(RingPtr ring, std::vector<LaurentPoly> comps);

  static VectorField coordinate(RingPtr ring, std::size_t i); // d/dx_i

  const RingPtr& ring() const { return ring_; }
  const std::vector<LaurentPoly>& components() const { return comps_; }
  LaurentPoly& component(std::size_t i) { return comps_.at(i); }
  const LaurentPoly& component(std::size_t i) const { return comps_.at(i); }
  bool is_zero() const;

  LaurentPoly apply(const LaurentPoly& f) const; // derivation action

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b);
  VectorField scaled(const LaurentPoly& f) const;
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.comps_ == b.comps_;
  }

private:
  RingPtr ring_;
  std::vector<LaurentPoly> comps_;
};

// Commutator of vector fields: [X, Y](f) = X(Y(f)) - Y(X(f)).
VectorField vf_bracket(const VectorField& x, const VectorField& y);

// Strictly increasing index tuple naming dx_{i1} ^ ... ^ dx_{ik}.
using FormIndex = std::vector<std::uint8_t>;

// Differential form of fixed degree with Laurent coefficients.  Degree 0 is a
// plain function (single empty-tuple slot); degree > nvars is identically 0.
class DiffForm {
public:
  DiffForm() = default;
  DiffForm(RingPtr ring, int degree);

  static DiffForm zero(RingPtr ring, int degree) { return DiffForm(std::move(ring), degree); }
  static DiffForm from_function(const LaurentPoly& f);
  // c * dx_{i1}^...^dx_{ik} for an arbitrary (possibly unsorted) tuple; the
  // tuple is sorted and the permutation sign absorbed into the coefficient.
  static DiffForm term(RingPtr ring, const std::vector<int>& idx, const LaurentPoly& c);

  const RingPtr& ring() const { return ring_; }
  int degree() const { return degree_; }
  const std::map<FormIndex, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const FormIndex& idx) const;

  void add_term(FormIndex idx, const LaurentPoly& c); // idx must be sorted

  DiffForm operator-() const;
  DiffForm& operator+=(const DiffForm& o);
  DiffForm& operator-=(const DiffForm& o);
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  DiffForm scaled(const LaurentPoly& f) const;
  DiffForm scaled(const Rational& c) const;
  friend bool operator==(const DiffForm& a, const DiffForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string str() const; // e.g. "3/2*x^2*y^-1 dx^dy + z dy^dz", "0"

private:
  RingPtr ring_;
  int degree_ = 0;
  std::map<FormIndex, LaurentPoly> terms_;
};

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm de_rham(const DiffForm& a);              // exterior derivative
DiffForm de_rham(const LaurentPoly& f);           // df as a 1-form
DiffForm interior(const VectorField& x, const DiffForm& a); // iota_x
DiffForm lie_derivative(const VectorField& x, const DiffForm& a); // Cartan formula

// Result of the term-by-term primitive search.  The method integrates each
// summand against the last variable present in it, sweeping variables from the
// last ring coordinate down; exponent -1 terms cannot be integrated in the
// Laurent ring and are collected as the obstruction.  For a closed input with
// zero obstruction, d(primitive) == input exactly.
struct PrimitiveResult {
  DiffForm primitive;   // degree k-1
  DiffForm obstruction; // degree k; zero iff the search succeeded
  bool exact() const { return obstruction.is_zero(); }
};

// Requires d(input) == 0 (throws std::domain_error otherwise) and degree >= 1.
PrimitiveResult find_primitive(const DiffForm& closed_form);

// Bounded-ansatz primitive search: eta of degree k-1 with d(eta) == target,
// every monomial exponent of eta within [-window, window] (negative exponents
// only on inverted variables).  Returns nullopt when the linear system over
// that box is inconsistent -- which proves nothing outside the box.
std::optional<DiffForm> solve_de_rham(const DiffForm& target, int window);

// All monomial forms of the given degree whose exponents lie in the window
// box: one c=1 term per (index tuple, monomial) pair, negative exponents only
// on inverted variables.  The ansatz basis behind solve_de_rham and the
// cover-level trivialization searches.
std::vector<DiffForm> monomial_form_basis(const RingPtr& ring, int degree, int window);

// Substitution homomorphism between chart rings, x_i -> images[i].
struct RingMorphism {
  RingPtr src;
  RingPtr dst;
  std::vector<LaurentPoly> images; // one per src variable, over dst

  LaurentPoly map(const LaurentPoly& f) const { return f.substitute(dst, images); }
  DiffForm map(const DiffForm& a) const;       // pullback along the substitution
  VectorField map(const VectorField& x) const; // pushforward; needs unit Jacobian det

  static RingMorphism identity(const RingPtr& ring);
};

// outer after inner; requires same_ring(inner.dst, outer.src).
RingMorphism compose(const RingMorphism& outer, const RingMorphism& inner);

} // namespace forge
