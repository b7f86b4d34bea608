#pragma once

#include <vector>

namespace macdel {

// Finite tuple of nonnegative integers; the empty composition is allowed.
using Composition = std::vector<int>;
// Weakly decreasing positive entries; empty allowed.
using Partition = std::vector<int>;

bool isComposition(const Composition& mu);
// Empty or last part nonzero.
bool isReduced(const Composition& mu);
// Drops trailing zeros.
Composition reduced(Composition mu);
bool isPartition(const Partition& lambda);
// Nonzero entries in weakly decreasing order.
Partition sortToPartition(const Composition& mu);
// mu * beta concatenation.
Composition concat(const Composition& a, const Composition& b);
Composition padded(Composition mu, int n);
int weight(const Composition& mu);

// beta_nu(i) = #{j <= i : nu_j <= nu_i} + #{j > i : nu_i > nu_j}, 1-based i.
int betaStat(const Composition& nu, int i);

// All partitions of n (weakly decreasing), largest-first enumeration.
std::vector<Partition> partitionsOf(int n);

}  // namespace macdel
