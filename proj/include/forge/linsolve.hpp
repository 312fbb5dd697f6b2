#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "forge/rational.hpp"

namespace forge {

// Incremental exact Gauss-Jordan elimination over Q with sparse rows.
// Columns are opaque indices; callers map their symbolic unknowns to them.
class ExactSolver {
public:
  using Row = std::map<std::size_t, Rational>;

  void add_row(Row row, Rational rhs);

  bool consistent() const { return !inconsistent_; }
  std::size_t rank() const { return pivots_.size(); }

  // One solution with all free unknowns set to 0; nullopt if inconsistent.
  std::optional<std::vector<Rational>> particular(std::size_t ncols) const;

  // Basis of the homogeneous nullspace (right-hand sides ignored).
  std::vector<std::vector<Rational>> nullspace(std::size_t ncols) const;

private:
  struct PivotRow {
    std::size_t col;
    Row row;
    Rational rhs;
  };
  std::vector<PivotRow> pivots_; // Jordan-reduced: each pivot col lives in one row
  std::map<std::size_t, std::size_t> by_col_;
  bool inconsistent_ = false;
};

} // namespace forge
