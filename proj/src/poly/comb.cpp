#include "poly/comb.hpp"

#include <algorithm>
#include <functional>

#include "common/error.hpp"

namespace macdel {

bool isComposition(const Composition& mu) {
  return std::all_of(mu.begin(), mu.end(), [](int p) { return p >= 0; });
}

bool isReduced(const Composition& mu) { return mu.empty() || mu.back() != 0; }

Composition reduced(Composition mu) {
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  return mu;
}

bool isPartition(const Partition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) return false;
    if (i > 0 && lambda[i - 1] < lambda[i]) return false;
  }
  return true;
}

Partition sortToPartition(const Composition& mu) {
  Partition out;
  for (int p : mu)
    if (p > 0) out.push_back(p);
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

Composition concat(const Composition& a, const Composition& b) {
  Composition out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Composition padded(Composition mu, int n) {
  if (static_cast<int>(mu.size()) > n)
    throw DomainError("padded: composition longer than the variable count");
  mu.resize(n, 0);
  return mu;
}

int weight(const Composition& mu) {
  int s = 0;
  for (int p : mu) s += p;
  return s;
}

int betaStat(const Composition& nu, int i) {
  if (i < 1 || i > static_cast<int>(nu.size())) throw DomainError("betaStat: index out of range");
  const int vi = nu[i - 1];
  int count = 0;
  for (int j = 1; j <= i; ++j)
    if (nu[j - 1] <= vi) ++count;
  for (int j = i + 1; j <= static_cast<int>(nu.size()); ++j)
    if (vi > nu[j - 1]) ++count;
  return count;
}

std::vector<Partition> partitionsOf(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxPart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxPart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n == 0 ? 1 : n);
  return out;
}

}  // namespace macdel
