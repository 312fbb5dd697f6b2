#include "forge/fock.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace forge {

int mode_weight(const FockMode& m) {
  const int wt = (m.g == FockGen::B) ? 0 : 1;
  return wt - m.n - 1;
}

int mono_weight(const FockMono& m) {
  int w = 0;
  for (const auto& md : m) w += mode_weight(md);
  return w;
}

int FreeFieldState::weight() const {
  int w = -1;
  for (const auto& [mono, c] : terms) w = std::max(w, mono_weight(mono));
  return w;
}

void FreeFieldState::add_term(FockMono m, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(std::move(m), c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

FreeFieldState FreeFieldState::operator-() const {
  FreeFieldState out;
  for (const auto& [m, c] : terms) out.terms.emplace(m, -c);
  return out;
}

FreeFieldState& FreeFieldState::operator+=(const FreeFieldState& o) {
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

FreeFieldState& FreeFieldState::operator-=(const FreeFieldState& o) {
  for (const auto& [m, c] : o.terms) add_term(m, -c);
  return *this;
}

FreeFieldState FreeFieldState::operator*(const Rational& c) const {
  FreeFieldState out;
  if (c == 0) return out;
  for (const auto& [m, k] : terms) out.terms.emplace(m, k * c);
  return out;
}

namespace {

FockMono with_mode(const FockMono& m, FockMode md) {
  FockMono out = m;
  out.insert(std::upper_bound(out.begin(), out.end(), md), md);
  return out;
}

// physics index -> shifted index
int shift_index(FockGen g, int physics_m) {
  return (g == FockGen::B) ? physics_m - 1 : physics_m;
}

const char* gen_name(FockGen g) {
  switch (g) {
    case FockGen::A: return "a";
    case FockGen::B: return "b";
    default: return "lam";
  }
}

} // namespace

FreeFieldState FockEngine::vacuum() const {
  FreeFieldState v;
  v.terms.emplace(FockMono{}, Rational(1));
  return v;
}

FreeFieldState FockEngine::monomial(
    const std::vector<std::pair<FockGen, int>>& modes, const Rational& coeff) const {
  FockMono m;
  for (const auto& [g, phys] : modes) {
    const int n = shift_index(g, phys);
    if (n > -1)
      throw std::invalid_argument(std::string("mode ") + gen_name(g) + "(" +
                                  std::to_string(phys) + ") is not a creation mode");
    m = with_mode(m, FockMode{g, n});
  }
  if (mono_weight(m) > cap_) throw WeightOverflow(mono_weight(m));
  FreeFieldState out;
  out.add_term(std::move(m), coeff);
  return out;
}

FreeFieldState FockEngine::apply_mode(FockGen g, int n, const FreeFieldState& v) const {
  FreeFieldState out;
  if (n <= -1) {
    // creation: multiply every monomial by the new mode
    const FockMode md{g, n};
    for (const auto& [mono, c] : v.terms) {
      FockMono ext = with_mode(mono, md);
      const int w = mono_weight(ext);
      if (w > cap_) throw WeightOverflow(w);
      out.add_term(std::move(ext), c);
    }
    return out;
  }
  // annihilation: commute through each creation mode, pick up the scalar
  // contraction, and drop the annihilator on the vacuum.
  for (const auto& [mono, c] : v.terms) {
    for (std::size_t i = 0; i < mono.size(); ++i) {
      const FockMode& cr = mono[i];
      Rational scalar = 0;
      if (g == FockGen::A && cr.g == FockGen::B && n + cr.n == -1)
        scalar = 1;
      else if (g == FockGen::B && cr.g == FockGen::A && n + cr.n == -1)
        scalar = -1;
      else if (g == FockGen::Lam && cr.g == FockGen::Lam && n + cr.n == 0)
        scalar = Rational(n) * k_;
      if (scalar == 0) continue;
      FockMono rest = mono;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      out.add_term(std::move(rest), c * scalar);
    }
  }
  return out;
}

// (g_(n0) w)_(n) v expanded through the iterate formula
//   sum_j (-1)^j C(n0,j) [ g_(n0-j)(w_(n+j) v) - (-1)^{n0} w_(n0+n-j)(g_(j) v) ],
// which terminates because w_(N) v vanishes once N >= wt(w) + wt(v) and
// g_(j) v vanishes once j exceeds wt(v).
FreeFieldState FockEngine::product_mono(const FockMono& m, const FreeFieldState& v,
                                        int n) const {
  FreeFieldState out;
  if (v.is_zero()) return out;
  if (m.empty()) {
    if (n == -1) out = v;
    return out;
  }
  const FockMode head = m.front();
  const FockMono rest(m.begin() + 1, m.end());
  const int n0 = head.n;

  const int jmax1 = mono_weight(rest) + v.weight() - n - 1;
  for (int j = 0; j <= jmax1; ++j) {
    FreeFieldState inner = product_mono(rest, v, n + j);
    if (inner.is_zero()) continue;
    FreeFieldState term = apply_mode(head.g, n0 - j, inner);
    out += term * binomial(n0, j) * ((j % 2 == 0) ? Rational(1) : Rational(-1));
  }

  const Rational parity = (((-n0) % 2) == 0) ? Rational(1) : Rational(-1); // (-1)^{n0}
  const int jmax2 = std::max(0, v.weight());
  for (int j = 0; j <= jmax2; ++j) {
    FreeFieldState inner = apply_mode(head.g, j, v);
    if (inner.is_zero()) continue;
    FreeFieldState term = product_mono(rest, inner, n0 + n - j);
    out -= term * parity * binomial(n0, j) * ((j % 2 == 0) ? Rational(1) : Rational(-1));
  }
  return out;
}

FreeFieldState FockEngine::nth_product(const FreeFieldState& u, const FreeFieldState& v,
                                       int n) const {
  FreeFieldState out;
  for (const auto& [mono, c] : u.terms) out += product_mono(mono, v, n) * c;
  return out;
}

FreeFieldState FockEngine::translate(const FreeFieldState& v) const {
  FreeFieldState out;
  for (const auto& [mono, c] : v.terms) {
    for (std::size_t i = 0; i < mono.size(); ++i) {
      FockMono shifted = mono;
      shifted.erase(shifted.begin() + static_cast<std::ptrdiff_t>(i));
      shifted = with_mode(shifted, FockMode{mono[i].g, mono[i].n - 1});
      const int w = mono_weight(shifted);
      if (w > cap_) throw WeightOverflow(w);
      out.add_term(std::move(shifted), c * Rational(-mono[i].n));
    }
  }
  return out;
}

// --- text form ---------------------------------------------------------------

std::string print_state(const FreeFieldState& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : s.terms) {
    Rational coeff = c;
    if (first) {
      if (coeff < 0) {
        out += "-";
        coeff = -coeff;
      }
      first = false;
    } else {
      out += (coeff < 0) ? " - " : " + ";
      if (coeff < 0) coeff = -coeff;
    }
    if (coeff != 1) out += to_string(coeff) + "*";
    std::size_t i = 0;
    while (i < mono.size()) {
      std::size_t run = i;
      while (run < mono.size() && mono[run] == mono[i]) ++run;
      const int phys = (mono[i].g == FockGen::B) ? mono[i].n + 1 : mono[i].n;
      out += std::string(gen_name(mono[i].g)) + "(" + std::to_string(phys) + ")";
      if (run - i > 1) out += "^" + std::to_string(run - i);
      i = run;
    }
    out += "|0>";
  }
  return out;
}

namespace {

struct StateParser {
  std::string s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("state parse error at offset " + std::to_string(i) +
                                ": " + what);
  }
  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++i;
    return true;
  }

  Integer integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    Integer v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return v;
  }

  int signed_int() {
    const bool neg = eat('-');
    Integer v = integer();
    if (v > 1000000) fail("mode index out of range");
    const int u = static_cast<int>(v);
    return neg ? -u : u;
  }

  Rational rational() {
    const Integer num = integer();
    if (eat('/')) {
      const Integer den = integer();
      if (den == 0) fail("zero denominator");
      return Rational(num) / Rational(den);
    }
    return Rational(num);
  }

  FockGen name() {
    if (eat('l')) {
      if (!(eat('a') && eat('m'))) fail("unknown generator (expected lam)");
      return FockGen::Lam;
    }
    if (eat('a')) return FockGen::A;
    if (eat('b')) return FockGen::B;
    fail("unknown generator (expected a, b, or lam)");
  }

  // one term after the sign has been consumed: [coeff *] modes "|0>"
  void term(FreeFieldState& acc, bool negative) {
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      if (!eat('*')) fail("expected '*' after coefficient");
    }
    if (negative) coeff = -coeff;
    FockMono mono;
    while (std::isalpha(static_cast<unsigned char>(peek()))) {
      const FockGen g = name();
      if (!eat('(')) fail("expected '('");
      const int phys = signed_int();
      if (!eat(')')) fail("expected ')'");
      int count = 1;
      if (eat('^')) {
        const Integer c = integer();
        if (c < 1 || c > 64) fail("bad exponent");
        count = static_cast<int>(c);
      }
      const int n = shift_index(g, phys);
      if (n > -1) fail(std::string(gen_name(g)) + "(" + std::to_string(phys) +
                       ") is not a creation mode");
      for (int r = 0; r < count; ++r) mono.push_back(FockMode{g, n});
    }
    if (!(eat('|') && eat('0') && eat('>'))) fail("expected '|0>'");
    std::sort(mono.begin(), mono.end());
    acc.add_term(std::move(mono), coeff);
  }
};

} // namespace

FreeFieldState parse_state(const std::string& text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  FreeFieldState out;
  if (compact == "0" || compact.empty()) return out;
  StateParser p{compact};
  bool neg = p.eat('-');
  if (!neg) p.eat('+');
  p.term(out, neg);
  while (!p.done()) {
    if (p.eat('+'))
      neg = false;
    else if (p.eat('-'))
      neg = true;
    else
      p.fail("expected '+' or '-' between terms");
    p.term(out, neg);
  }
  return out;
}

// --- affine sl2 --------------------------------------------------------------

Sl2Triple wakimoto_sl2(const FockEngine& engine) {
  using G = FockGen;
  const Rational k = engine.lambda_pairing();
  Sl2Triple t;
  t.e = engine.monomial({{G::A, -1}});
  t.h = engine.monomial({{G::A, -1}, {G::B, 0}}, -2) + engine.monomial({{G::Lam, -1}});
  t.f = engine.monomial({{G::A, -1}, {G::B, 0}, {G::B, 0}}, -1) +
        engine.monomial({{G::B, -1}}, -2) +
        engine.monomial({{G::B, 0}, {G::Lam, -1}}) +
        engine.monomial({{G::B, -1}}, k / 2);
  return t;
}

Sl2FieldReport check_affine_sl2(const FockEngine& engine, const Sl2Triple& t) {
  Sl2FieldReport rep;
  auto prod = [&](const FreeFieldState& x, const FreeFieldState& y, int n) {
    return engine.nth_product(x, y, n);
  };
  auto line = [&](const std::string& name, bool ok, const std::string& detail = "") {
    rep.lines.push_back({name, ok, ok ? "" : detail});
  };

  const FreeFieldState ef1 = prod(t.e, t.f, 1);
  Rational kappa = 0;
  if (auto it = ef1.terms.find(FockMono{}); it != ef1.terms.end()) kappa = it->second;
  rep.kappa = kappa;
  const FreeFieldState kv = engine.vacuum() * kappa;

  line("bracket-h-e", prod(t.h, t.e, 0) == t.e * Rational(2),
       print_state(prod(t.h, t.e, 0)));
  line("bracket-h-f", prod(t.h, t.f, 0) == t.f * Rational(-2),
       print_state(prod(t.h, t.f, 0)));
  line("bracket-e-f", prod(t.e, t.f, 0) == t.h, print_state(prod(t.e, t.f, 0)));
  line("bracket-mirror",
       prod(t.e, t.h, 0) == t.e * Rational(-2) && prod(t.f, t.h, 0) == t.f * Rational(2) &&
           prod(t.f, t.e, 0) == -t.h,
       print_state(prod(t.f, t.e, 0)));
  line("bracket-diagonal",
       prod(t.e, t.e, 0).is_zero() && prod(t.h, t.h, 0).is_zero() &&
           prod(t.f, t.f, 0).is_zero(),
       "");
  line("pairing-e-f", ef1 == kv && prod(t.f, t.e, 1) == kv, print_state(ef1));
  line("pairing-h-h", prod(t.h, t.h, 1) == kv * Rational(2),
       print_state(prod(t.h, t.h, 1)));
  line("pairing-off-diagonal",
       prod(t.e, t.e, 1).is_zero() && prod(t.f, t.f, 1).is_zero() &&
           prod(t.e, t.h, 1).is_zero() && prod(t.h, t.e, 1).is_zero() &&
           prod(t.f, t.h, 1).is_zero() && prod(t.h, t.f, 1).is_zero(),
       "");
  bool higher = true;
  for (const FreeFieldState* x : {&t.e, &t.h, &t.f})
    for (const FreeFieldState* y : {&t.e, &t.h, &t.f})
      higher = higher && prod(*x, *y, 2).is_zero() && prod(*x, *y, 3).is_zero();
  line("higher-products-vanish", higher, "");
  return rep;
}

FreeFieldState sugawara_image(const FockEngine& engine, const Sl2Triple& t) {
  FreeFieldState s = engine.nth_product(t.e, t.f, -1) +
                     engine.nth_product(t.f, t.e, -1) +
                     engine.nth_product(t.h, t.h, -1) * Rational(1, 2);
  for (const auto& [mono, c] : s.terms)
    for (const auto& md : mono)
      if (md.g != FockGen::Lam)
        throw std::domain_error("Sugawara image leaves the Heisenberg subspace: " +
                                print_state(s));
  return s;
}

bool borcherds_identity(const FockEngine& engine, const FreeFieldState& u,
                        const FreeFieldState& v, const FreeFieldState& w, int m,
                        int n, int k) {
  auto sign = [](int j) { return (j % 2 == 0) ? Rational(1) : Rational(-1); };

  FreeFieldState lhs;
  const int jmax_l = std::max(0, u.weight() + v.weight() - n);
  for (int j = 0; j <= jmax_l; ++j) {
    const Rational c = binomial(m, j);
    if (c == 0) continue;
    FreeFieldState inner = engine.nth_product(u, v, n + j);
    if (inner.is_zero()) continue;
    lhs += engine.nth_product(inner, w, m + k - j) * c;
  }

  FreeFieldState rhs;
  const Rational parity = sign(n < 0 ? -n : n); // (-1)^n
  const int jmax_r = std::max({0, v.weight() + w.weight() - k, u.weight() + w.weight() - m});
  for (int j = 0; j <= jmax_r; ++j) {
    const Rational c = binomial(n, j) * sign(j);
    if (c == 0) continue;
    FreeFieldState inner1 = engine.nth_product(v, w, k + j);
    if (!inner1.is_zero()) rhs += engine.nth_product(u, inner1, m + n - j) * c;
    FreeFieldState inner2 = engine.nth_product(u, w, m + j);
    if (!inner2.is_zero()) rhs -= engine.nth_product(v, inner2, n + k - j) * (c * parity);
  }
  return lhs == rhs;
}

} // namespace forge
