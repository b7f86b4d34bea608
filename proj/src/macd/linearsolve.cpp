#include "macd/linearsolve.hpp"

namespace macdel {

bool Eliminator::addRow(SparseRow row) {
  while (!row.empty()) {
    const int lead = row.begin()->first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      // normalize to leading coefficient 1
      const QQt inv = row.begin()->second.inverse();
      for (auto& [c, v] : row) v *= inv;
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    const QQt factor = row.begin()->second;
    for (const auto& [c, v] : it->second) {
      auto [jt, fresh] = row.try_emplace(c, QQt::zero());
      jt->second -= factor * v;
      if (jt->second.isZero()) row.erase(jt);
    }
  }
  return false;
}

Eliminator::SolveStatus Eliminator::solve(std::vector<QQt>& solution) const {
  if (pivots_.count(ncols_)) return SolveStatus::Inconsistent;
  if (rank() != ncols_) return SolveStatus::Underdetermined;
  solution.assign(ncols_, QQt::zero());
  // back-substitution in descending pivot order
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    const int p = it->first;
    QQt value;
    for (const auto& [c, v] : it->second) {
      if (c == p) continue;
      if (c == ncols_)
        value += v;  // rhs column
      else
        value -= v * solution[c];
    }
    solution[p] = value;
  }
  return SolveStatus::Unique;
}

}  // namespace macdel
