#pragma once

#include <string>
#include <vector>

#include "forge/rational.hpp"

namespace forge {

// Finite-dimensional Lie algebra with an invariant symmetric pairing, given by
// structure constants over Q.  This is the fibre type of a chart's kernel:
// elements pair to functions and bracket back into the kernel, with zero anchor.
struct KernelAlgebra {
  std::vector<std::string> names;
  // bracket[r][s][t] = coefficient of generator t in [g_r, g_s]
  std::vector<std::vector<std::vector<Rational>>> bracket;
  // pairing[r][s] = <g_r, g_s>
  std::vector<std::vector<Rational>> pairing;

  std::size_t dim() const { return names.size(); }

  // Structural checks: bracket antisymmetry, Jacobi, pairing symmetry, and
  // invariance <[a,b],c> + <b,[a,c]> = 0.  Throws std::domain_error on failure.
  void validate() const;

  // [v, w] for coefficient vectors v, w.
  std::vector<Rational> apply_bracket(const std::vector<Rational>& v,
                                      const std::vector<Rational>& w) const;
  Rational apply_pairing(const std::vector<Rational>& v,
                         const std::vector<Rational>& w) const;

  bool is_abelian() const;
  // True iff generator r commutes with the whole algebra.
  bool is_central(std::size_t r) const;

  friend bool operator==(const KernelAlgebra& a, const KernelAlgebra& b) {
    return a.bracket == b.bracket && a.pairing == b.pairing;
  }

  // Trivial kernel (rank 0).
  static KernelAlgebra trivial();
  // Abelian kernel with a given symmetric pairing matrix.
  static KernelAlgebra abelian(std::vector<std::string> names,
                               std::vector<std::vector<Rational>> pairing);
  // sl2 = span{e, h, f}: [h,e] = 2e, [h,f] = -2f, [e,f] = h, with the
  // normalized invariant pairing <e,f> = 1, <h,h> = 2, scaled by `level`.
  static KernelAlgebra sl2(const Rational& level = 1);
  // sl2 plus a one-dimensional center z with <z,z> = center_pairing and
  // <sl2, z> = 0 (the only invariant-compatible choice).
  static KernelAlgebra sl2_plus_center(const Rational& level = 1,
                                       const Rational& center_pairing = 1);
};

} // namespace forge
