#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qt/tseries.hpp"
#include "stable/almostsym.hpp"

namespace macdel {

enum class Verdict { StabilizedExact, CauchyIncreasing, Diverged };
std::string verdictName(Verdict v);

// Per-key valuation evidence across the sampled levels. diffVals[j] is the
// t-adic valuation of coeffs[j+1] - coeffs[j]; nullopt encodes an exactly
// zero difference (infinite valuation).
struct KeyEvidence {
  PhiIndex key;
  std::vector<QQt> coeffs;  // aligned with LimitReport::levels
  std::vector<std::optional<long>> diffVals;
  Verdict verdict = Verdict::Diverged;
  std::optional<QQt> exactLimit;  // set when stabilized
  TSeries limitSeries{-1};        // truncated to the largest provably-correct order
};

struct LimitReport {
  int k = 0;
  int seriesOrder = 0;
  std::vector<int> levels;         // levels that produced a usable snapshot
  std::vector<int> skippedLevels;  // below threshold for this family
  std::vector<KeyEvidence> keys;
  Verdict verdict = Verdict::Diverged;

  // True when every key's final coefficient is zero or has valuation >=
  // threshold: the family is converging to 0 at that resolution.
  bool limitIsZero(long threshold) const;
  std::string summary() const;
};

// Expands family(level) at each requested level, aligns (mu|lambda) keys,
// classifies the coefficient sequences per key, and estimates limits as
// truncated series. Levels whose snapshot violates the expansion
// preconditions are skipped and recorded.
LimitReport checkConvergence(const std::function<Poly(int)>& family, int k,
                             const std::vector<int>& levels, int seriesOrder);

// Convenience: inclusive level range.
std::vector<int> levelRange(int lo, int hi);

}  // namespace macdel
