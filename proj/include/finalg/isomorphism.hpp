#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finalg/finite_group.hpp"

namespace finalg {

struct IsoResult {
  bool isomorphic = false;
  /// witness[g] is the image of g when isomorphic.
  std::vector<Element> witness;
  /// Name of the first invariant that differs, when not isomorphic.
  std::string obstruction;
};

/// Screens order, order spectrum, center size, abelianization and class sizes,
/// then backtracks over images of a generating set. Both groups need tables.
IsoResult is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// Checks that `map` is a bijection with map(ab) = map(a)map(b) for all pairs.
bool verify_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Element>& map);

/// Dihedral orders (descending) whose direct product is isomorphic to g, with
/// D_2 = C_2 allowed. Candidates are tried with fewer factors first and, for
/// equal counts, in descending lexicographic order. The trivial group gives an
/// empty list. nullopt when no product matches.
std::optional<std::vector<std::uint64_t>> is_dihedral_product(const FiniteGroup& g);

}  // namespace finalg
