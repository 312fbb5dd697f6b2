#include "forge/linsolve.hpp"

namespace forge {

void ExactSolver::add_row(Row row, Rational rhs) {
  // Reduce against current pivots until no pivot column remains in the row.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [c, v] : row) {
      auto it = by_col_.find(c);
      if (it == by_col_.end()) continue;
      const PivotRow& p = pivots_[it->second];
      Rational factor = v / p.row.at(c);
      for (const auto& [pc, pv] : p.row) {
        auto [rit, inserted] = row.emplace(pc, -factor * pv);
        if (!inserted) {
          rit->second -= factor * pv;
          if (rit->second == 0) row.erase(rit);
        } else if (rit->second == 0) {
          row.erase(rit);
        }
      }
      rhs -= factor * p.rhs;
      changed = true;
      break;
    }
  }
  if (row.empty()) {
    if (rhs != 0) inconsistent_ = true;
    return;
  }
  std::size_t col = row.begin()->first;
  // Jordan step: eliminate the new pivot column from all stored rows.
  for (auto& p : pivots_) {
    auto it = p.row.find(col);
    if (it == p.row.end()) continue;
    Rational factor = it->second / row.at(col);
    for (const auto& [c, v] : row) {
      auto [rit, inserted] = p.row.emplace(c, -factor * v);
      if (!inserted) {
        rit->second -= factor * v;
        if (rit->second == 0) p.row.erase(rit);
      } else if (rit->second == 0) {
        p.row.erase(rit);
      }
    }
    p.rhs -= factor * rhs;
  }
  by_col_[col] = pivots_.size();
  pivots_.push_back(PivotRow{col, std::move(row), std::move(rhs)});
}

std::optional<std::vector<Rational>> ExactSolver::particular(std::size_t ncols) const {
  if (inconsistent_) return std::nullopt;
  std::vector<Rational> x(ncols, Rational(0));
  for (const auto& p : pivots_) {
    if (p.col >= ncols) continue;
    x[p.col] = p.rhs / p.row.at(p.col); // free unknowns are 0
  }
  return x;
}

std::vector<std::vector<Rational>> ExactSolver::nullspace(std::size_t ncols) const {
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (by_col_.count(f)) continue;
    std::vector<Rational> x(ncols, Rational(0));
    x[f] = 1;
    for (const auto& p : pivots_) {
      auto it = p.row.find(f);
      if (it != p.row.end() && p.col < ncols)
        x[p.col] = -it->second / p.row.at(p.col);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

} // namespace forge
