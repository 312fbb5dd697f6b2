#pragma once

#include <memory>
#include <string>
#include <vector>

namespace forge {

// A chart's coordinate ring: a polynomial ring over Q in named variables,
// with an optional per-variable inversion flag (Laurent localization).
// Variables are addressed by index everywhere; names matter for I/O only.
struct ChartRing {
  std::vector<std::string> vars;
  std::vector<bool> inverted; // size == vars.size(); true = variable is a unit

  ChartRing() = default;
  ChartRing(std::vector<std::string> v, std::vector<bool> inv)
      : vars(std::move(v)), inverted(std::move(inv)) {}
  explicit ChartRing(std::vector<std::string> v)
      : vars(std::move(v)), inverted(vars.size(), false) {}

  std::size_t nvars() const { return vars.size(); }
  int var_index(const std::string& name) const; // -1 if absent

  friend bool operator==(const ChartRing& a, const ChartRing& b) {
    return a.vars == b.vars && a.inverted == b.inverted;
  }
};

using RingPtr = std::shared_ptr<const ChartRing>;

inline RingPtr make_ring(std::vector<std::string> vars,
                         std::vector<std::string> inverted_vars = {}) {
  std::vector<bool> inv(vars.size(), false);
  for (const auto& name : inverted_vars)
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) inv[i] = true;
  return std::make_shared<const ChartRing>(std::move(vars), std::move(inv));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

} // namespace forge
