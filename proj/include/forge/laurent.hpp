#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "forge/rational.hpp"
#include "forge/ring.hpp"

namespace forge {

// Exponent vector of a (Laurent) monomial; size == ring->nvars().
using Monomial = std::vector<std::int32_t>;

inline long total_degree(const Monomial& m) {
  long d = 0;
  for (auto e : m) d += e;
  return d;
}

// Canonical term order: graded-lex, highest first.  A term precedes another if
// its total degree is larger, ties broken lexicographically on the exponent
// vector (larger exponent on the earliest differing variable first).  Printing
// and map iteration both follow this order, so all output is deterministic.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b; // lexicographic on exponents, descending
  }
};

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Invariants: no zero coefficients stored; every negative exponent sits on a
// variable the ring has inverted.
class LaurentPoly {
public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  LaurentPoly() = default;
  explicit LaurentPoly(RingPtr ring) : ring_(std::move(ring)) {}
  LaurentPoly(RingPtr ring, const Rational& c);

  static LaurentPoly zero(RingPtr ring) { return LaurentPoly(std::move(ring)); }
  static LaurentPoly constant(RingPtr ring, const Rational& c) {
    return LaurentPoly(std::move(ring), c);
  }
  static LaurentPoly variable(RingPtr ring, std::size_t i, std::int32_t exp = 1);
  static LaurentPoly monomial(RingPtr ring, Monomial m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const; // 0 if zero, coefficient of x^0 otherwise

  void add_term(const Monomial& m, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly operator*(const Rational& c) const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  // d/dx_i (exact; x^{-k} differentiates within the localization).
  LaurentPoly derivative(std::size_t i) const;

  // Substitution x_j -> images[j].  Negative exponents require the image to be
  // an invertible term (single monomial, coefficient a unit in Q), since only
  // those have a Laurent inverse.
  LaurentPoly substitute(const RingPtr& target,
                         const std::vector<LaurentPoly>& images) const;

  // True iff the polynomial is a single term c * x^m.
  bool is_term() const { return terms_.size() == 1; }

  // Inverse of a single-term polynomial; throws std::domain_error otherwise or
  // if a resulting negative exponent lands on a non-inverted variable.
  LaurentPoly term_inverse() const;

  std::string str() const; // canonical text form, e.g. "3/2*x^2*y^-1 - 2"

private:
  RingPtr ring_;
  TermMap terms_;
  void check_legal(const Monomial& m) const;
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p * c; }

} // namespace forge
