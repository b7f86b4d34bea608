#pragma once

#include <map>
#include <vector>

#include "qt/qqt.hpp"

namespace macdel {

// Sparse row: column index -> nonzero coefficient.
using SparseRow = std::map<int, QQt>;

// Incremental exact Gaussian elimination over Q(q,t).
class Eliminator {
 public:
  explicit Eliminator(int ncols) : ncols_(ncols) {}

  // Reduces the row against current pivots; installs a new pivot when a
  // nonzero residue remains. Returns false if the row reduced to zero.
  bool addRow(SparseRow row);

  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::map<int, SparseRow>& pivots() const { return pivots_; }

  // Unique solution of the accumulated system A x = b where the right-hand
  // side lives in an extra trailing column (index ncols). Requires a pivot in
  // every unknown column and no pivot in the rhs column.
  //   - pivot in rhs column  -> inconsistent system
  //   - missing unknown pivot -> kernel dimension > expected
  enum class SolveStatus { Unique, Inconsistent, Underdetermined };
  SolveStatus solve(std::vector<QQt>& solution) const;

 private:
  int ncols_;  // unknown columns; column ncols_ is the rhs
  std::map<int, SparseRow> pivots_;
};

}  // namespace macdel
