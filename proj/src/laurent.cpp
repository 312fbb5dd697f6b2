#include "forge/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace forge {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
}

Rational binomial(long n, long j) {
  if (j < 0) return 0;
  Rational r = 1;
  for (long t = 0; t < j; ++t) {
    r *= Rational(n - t);
    r /= Rational(t + 1);
  }
  return r;
}

LaurentPoly::LaurentPoly(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
  if (c != 0) terms_.emplace(Monomial(ring_->nvars(), 0), c);
}

LaurentPoly LaurentPoly::variable(RingPtr ring, std::size_t i, std::int32_t exp) {
  Monomial m(ring->nvars(), 0);
  m.at(i) = exp;
  return monomial(std::move(ring), std::move(m), 1);
}

LaurentPoly LaurentPoly::monomial(RingPtr ring, Monomial m, const Rational& c) {
  LaurentPoly p(std::move(ring));
  p.add_term(m, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
         terms_.begin()->first == Monomial(ring_->nvars(), 0);
}

Rational LaurentPoly::constant_value() const {
  Monomial unit(ring_->nvars(), 0);
  auto it = terms_.find(unit);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::check_legal(const Monomial& m) const {
  if (m.size() != ring_->nvars())
    throw std::invalid_argument("monomial arity does not match ring");
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] < 0 && !ring_->inverted[i])
      throw std::domain_error("negative exponent on non-inverted variable '" +
                              ring_->vars[i] + "'");
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  check_legal(m);
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (!ring_) ring_ = o.ring_;
  else if (!o.terms_.empty() && !same_ring(ring_, o.ring_))
    throw std::invalid_argument("ring mismatch in +");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (!ring_) ring_ = o.ring_;
  else if (!o.terms_.empty() && !same_ring(ring_, o.ring_))
    throw std::invalid_argument("ring mismatch in -");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (!same_ring(a.ring_, b.ring_) && !a.terms_.empty() && !b.terms_.empty())
    throw std::invalid_argument("ring mismatch in *");
  LaurentPoly r(a.ring_ ? a.ring_ : b.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(ma);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
  LaurentPoly r(ring_);
  if (c == 0) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

LaurentPoly LaurentPoly::derivative(std::size_t i) const {
  LaurentPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d(m);
    d[i] -= 1;
    r.add_term(d, c * Rational(m[i]));
  }
  return r;
}

LaurentPoly LaurentPoly::term_inverse() const {
  if (terms_.size() != 1)
    throw std::domain_error("only single-term polynomials are invertible here");
  const auto& [m, c] = *terms_.begin();
  Monomial inv(m);
  for (auto& e : inv) e = -e;
  LaurentPoly r(ring_);
  r.add_term(inv, Rational(1) / c); // add_term re-checks localization legality
  return r;
}

LaurentPoly LaurentPoly::substitute(const RingPtr& target,
                                    const std::vector<LaurentPoly>& images) const {
  if (images.size() != ring_->nvars())
    throw std::invalid_argument("substitution image count mismatch");
  LaurentPoly r(target);
  for (const auto& [m, c] : terms_) {
    LaurentPoly t = LaurentPoly::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      LaurentPoly base = m[i] > 0 ? images[i] : images[i].term_inverse();
      for (std::int32_t e = 0; e < (m[i] > 0 ? m[i] : -m[i]); ++e) t = t * base;
    }
    r += t;
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += ring_->vars[i];
      if (m[i] != 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      out << to_string(a);
    } else if (a == 1) {
      out << vars;
    } else {
      out << to_string(a) << "*" << vars;
    }
  }
  return out.str();
}

int ChartRing::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

} // namespace forge
