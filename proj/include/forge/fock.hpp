#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "forge/rational.hpp"

namespace forge {

// Free-field state space: a polynomial charge-pair (a, b) with [a_m, b_k] =
// delta_{m+k,0}, and a Heisenberg generator lam with [lam_m, lam_k] =
// m <lam,lam> delta_{m+k,0}.  States are spanned by monomials of creation
// modes applied to the vacuum: a(m) for m <= -1, b(m) for m <= 0, and lam(m)
// for m <= -1 (physics indexing).  All creation modes commute, so a monomial
// is a multiset.
//
// Internally every mode is kept in shifted indexing n where creation means
// n <= -1 uniformly: a(m) -> n = m, b(m) -> n = m - 1, lam(m) -> n = m.  The
// shifted index is what the product recursion below manipulates; only parsing
// and printing convert back to physics indexing.
enum class FockGen : std::uint8_t { A = 0, B = 1, Lam = 2 };

struct FockMode {
  FockGen g;
  int n; // shifted index
  auto operator<=>(const FockMode&) const = default;
};

// weight of the mode g_(n): wt(g) - n - 1 with wt(a) = wt(lam) = 1, wt(b) = 0
int mode_weight(const FockMode& m);

using FockMono = std::vector<FockMode>; // kept sorted

int mono_weight(const FockMono& m);

struct FreeFieldState {
  std::map<FockMono, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  int weight() const; // max over monomials; -1 for the zero state

  void add_term(FockMono m, const Rational& c);

  FreeFieldState operator-() const;
  FreeFieldState& operator+=(const FreeFieldState& o);
  FreeFieldState& operator-=(const FreeFieldState& o);
  friend FreeFieldState operator+(FreeFieldState a, const FreeFieldState& b) { return a += b; }
  friend FreeFieldState operator-(FreeFieldState a, const FreeFieldState& b) { return a -= b; }
  FreeFieldState operator*(const Rational& c) const;
  friend bool operator==(const FreeFieldState&, const FreeFieldState&) = default;
};

struct WeightOverflow : std::runtime_error {
  int weight;
  explicit WeightOverflow(int w)
      : std::runtime_error("state weight " + std::to_string(w) +
                           " exceeds the configured cap"),
        weight(w) {}
};

class FockEngine {
public:
  explicit FockEngine(Rational lambda_pairing, int weight_cap = 2)
      : k_(std::move(lambda_pairing)), cap_(weight_cap) {}

  const Rational& lambda_pairing() const { return k_; }
  int weight_cap() const { return cap_; }

  FreeFieldState vacuum() const;
  // Creation monomial from physics-indexed modes, e.g. {{A,-1},{B,0}}.
  FreeFieldState monomial(const std::vector<std::pair<FockGen, int>>& modes,
                          const Rational& coeff = 1) const;

  // Action of the single mode g_(n) (shifted index, any sign) on a state.
  FreeFieldState apply_mode(FockGen g, int n, const FreeFieldState& v) const;

  // u_(n) v for n >= -2.  Evaluated by peeling the leftmost creation mode of
  // u through the product recursion; all intermediate weights respect the cap.
  FreeFieldState nth_product(const FreeFieldState& u, const FreeFieldState& v,
                             int n) const;

  // Translation operator: T(g_(n)) = -n g_(n-1) termwise, T|0> = 0.
  FreeFieldState translate(const FreeFieldState& v) const;

private:
  Rational k_;
  int cap_;
  FreeFieldState product_mono(const FockMono& m, const FreeFieldState& v, int n) const;
};

// Text grammar: "2*a(-1)b(0)^2|0> - 1/2*lam(-1)|0>", physics mode indices.
std::string print_state(const FreeFieldState& s);
FreeFieldState parse_state(const std::string& text);

// --- affine sl2 on the free-field side --------------------------------------

struct Sl2FieldReport {
  struct Line {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Line> lines;
  Rational kappa; // read off from e_(1) f
  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

// The currents e, h, f at deformation parameter k = <lam,lam>:
//   e = a(-1)|0>,
//   h = -2 a(-1)b(0)|0> + lam(-1)|0>,
//   f = -a(-1)b(0)^2|0> - 2 b(-1)|0> + b(0)lam(-1)|0> + (k/2) b(-1)|0>.
struct Sl2Triple {
  FreeFieldState e, h, f;
};
Sl2Triple wakimoto_sl2(const FockEngine& engine);

// Verifies the full current table: 0-products give the bracket, 1-products
// give kappa times the pairing, higher products vanish.
Sl2FieldReport check_affine_sl2(const FockEngine& engine, const Sl2Triple& t);

// e_(-1)f + f_(-1)e + (1/2) h_(-1)h.  Throws std::domain_error if the result
// involves any a/b modes (it must lie in the lam subspace).
FreeFieldState sugawara_image(const FockEngine& engine, const Sl2Triple& t);

// Exact check of the product identity with parameters (m, n, k) on states
// u, v, w.  Needs an engine cap generous enough for the intermediate weights.
bool borcherds_identity(const FockEngine& engine, const FreeFieldState& u,
                        const FreeFieldState& v, const FreeFieldState& w,
                        int m, int n, int k);

} // namespace forge
