#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finalg/bounds.hpp"
#include "finalg/finite_group.hpp"

namespace finalg {

/// A construction plan for a group: a standard atom or a left-nested product.
struct GroupExpr {
  enum class Kind { Cyclic, Dihedral, Quaternion8, Symmetric, Holomorph, Agl1, Gl2, Sl2, Uc, Product };
  Kind kind = Kind::Cyclic;
  std::uint64_t n = 1;
  std::vector<GroupExpr> factors;  // Product only

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

/// Canonical text in the expression grammar, e.g. "D8 x D6" or "Hol(12)".
std::string to_string(const GroupExpr& e);

FiniteGroup build_group(const GroupExpr& e, const Bounds& bounds = {});

}  // namespace finalg
