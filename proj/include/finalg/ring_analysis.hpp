#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "finalg/finite_group.hpp"
#include "finalg/finite_ring.hpp"

namespace finalg {

struct UnitGroupResult {
  FiniteGroup group;
  /// unit_elements[g] is the ring element of group element g (ascending ring order).
  std::vector<RingElem> unit_elements;
  /// Same map as unit_elements; kept separate so callers can name the intent.
  const std::vector<RingElem>& embedding() const noexcept { return unit_elements; }
};

/// Units found by searching for a right inverse and then confirming it is a
/// left inverse too; a mismatch throws InternalError. Throws SizeExceeded
/// above bounds.max_elements.
UnitGroupResult units(const FiniteRing& r, const Bounds& bounds = {});

/// {x : 1 - r x is a unit for every r}, ascending.
std::vector<RingElem> jacobson_radical(const FiniteRing& r, const Bounds& bounds = {});

/// {z : z r = r z for every r}, ascending.
std::vector<RingElem> center_ring(const FiniteRing& r, const Bounds& bounds = {});

/// Least m >= 1 with u^m = 1, or nullopt when u is not a unit.
std::optional<std::uint64_t> ring_element_order(const FiniteRing& r, RingElem u);

}  // namespace finalg
