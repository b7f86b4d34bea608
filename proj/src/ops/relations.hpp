#pragma once

#include <string>
#include <vector>

#include "poly/poly.hpp"

namespace macdel {

struct RelationCheck {
  std::string relation;
  bool pass = true;
  std::string witness;  // first failing input and the difference, empty on pass
};

struct RelationReport {
  int n = 0;
  int degreeBound = 0;
  std::vector<RelationCheck> checks;
  bool allPass() const;
};

// Applies both sides of every defining relation of the algebra (quadratic,
// braid, commutations, the two cross relations) to every monomial of degree
// <= degreeBound in n variables and records the first discrepancy per
// relation.
RelationReport checkDahaRelations(int n, int degreeBound);

}  // namespace macdel
