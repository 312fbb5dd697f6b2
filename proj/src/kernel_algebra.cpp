#include "forge/kernel_algebra.hpp"

#include <stdexcept>

namespace forge {

void KernelAlgebra::validate() const {
  std::size_t n = dim();
  if (bracket.size() != n || pairing.size() != n)
    throw std::domain_error("kernel algebra: shape mismatch");
  for (std::size_t r = 0; r < n; ++r) {
    if (bracket[r].size() != n || pairing[r].size() != n)
      throw std::domain_error("kernel algebra: shape mismatch");
    for (std::size_t s = 0; s < n; ++s)
      if (bracket[r][s].size() != n)
        throw std::domain_error("kernel algebra: shape mismatch");
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t)
        if (bracket[r][s][t] != -bracket[s][r][t])
          throw std::domain_error("kernel algebra: bracket not antisymmetric");
      if (pairing[r][s] != pairing[s][r])
        throw std::domain_error("kernel algebra: pairing not symmetric");
    }
  // Jacobi: [[r,s],t] + [[s,t],r] + [[t,r],s] = 0
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t u = 0; u < n; ++u) {
          Rational acc = 0;
          for (std::size_t m = 0; m < n; ++m)
            acc += bracket[r][s][m] * bracket[m][t][u] +
                   bracket[s][t][m] * bracket[m][r][u] +
                   bracket[t][r][m] * bracket[m][s][u];
          if (acc != 0) throw std::domain_error("kernel algebra: Jacobi fails");
        }
  // Invariance: <[r,s],t> + <s,[r,t]> = 0
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        Rational acc = 0;
        for (std::size_t m = 0; m < n; ++m)
          acc += bracket[r][s][m] * pairing[m][t] + bracket[r][t][m] * pairing[s][m];
        if (acc != 0) throw std::domain_error("kernel algebra: pairing not invariant");
      }
}

std::vector<Rational> KernelAlgebra::apply_bracket(const std::vector<Rational>& v,
                                                   const std::vector<Rational>& w) const {
  std::size_t n = dim();
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t r = 0; r < n; ++r) {
    if (v[r] == 0) continue;
    for (std::size_t s = 0; s < n; ++s) {
      if (w[s] == 0) continue;
      for (std::size_t t = 0; t < n; ++t) out[t] += v[r] * w[s] * bracket[r][s][t];
    }
  }
  return out;
}

Rational KernelAlgebra::apply_pairing(const std::vector<Rational>& v,
                                      const std::vector<Rational>& w) const {
  Rational acc = 0;
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t s = 0; s < dim(); ++s) acc += v[r] * pairing[r][s] * w[s];
  return acc;
}

bool KernelAlgebra::is_abelian() const {
  for (const auto& row : bracket)
    for (const auto& col : row)
      for (const auto& c : col)
        if (c != 0) return false;
  return true;
}

bool KernelAlgebra::is_central(std::size_t r) const {
  for (std::size_t s = 0; s < dim(); ++s)
    for (std::size_t t = 0; t < dim(); ++t)
      if (bracket[r][s][t] != 0) return false;
  return true;
}

KernelAlgebra KernelAlgebra::trivial() { return KernelAlgebra{}; }

KernelAlgebra KernelAlgebra::abelian(std::vector<std::string> names,
                                     std::vector<std::vector<Rational>> pairing) {
  KernelAlgebra k;
  std::size_t n = names.size();
  k.names = std::move(names);
  k.bracket.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
  k.pairing = std::move(pairing);
  k.validate();
  return k;
}

KernelAlgebra KernelAlgebra::sl2(const Rational& level) {
  KernelAlgebra k;
  k.names = {"e", "h", "f"};
  std::size_t n = 3;
  k.bracket.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
  auto set = [&](std::size_t r, std::size_t s, std::size_t t, const Rational& c) {
    k.bracket[r][s][t] = c;
    k.bracket[s][r][t] = -c;
  };
  // indices: e=0, h=1, f=2
  set(1, 0, 0, 2);  // [h,e] = 2e
  set(1, 2, 2, -2); // [h,f] = -2f
  set(0, 2, 1, 1);  // [e,f] = h
  k.pairing.assign(n, std::vector<Rational>(n, Rational(0)));
  k.pairing[0][2] = k.pairing[2][0] = level;
  k.pairing[1][1] = 2 * level;
  k.validate();
  return k;
}

KernelAlgebra KernelAlgebra::sl2_plus_center(const Rational& level,
                                             const Rational& center_pairing) {
  KernelAlgebra base = sl2(level);
  KernelAlgebra k;
  k.names = base.names;
  k.names.push_back("z");
  std::size_t n = 4;
  k.bracket.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
  k.pairing.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t s = 0; s < 3; ++s) {
      for (std::size_t t = 0; t < 3; ++t) k.bracket[r][s][t] = base.bracket[r][s][t];
      k.pairing[r][s] = base.pairing[r][s];
    }
  k.pairing[3][3] = center_pairing;
  k.validate();
  return k;
}

} // namespace forge
