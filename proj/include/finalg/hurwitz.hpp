#pragma once

#include <array>
#include <vector>

#include "finalg/finite_group.hpp"

namespace finalg {

/// A quaternion w + xi + yj + zk stored with doubled coordinates, so the
/// half-integer units stay integral.
struct Quat2 {
  int w, x, y, z;
  friend bool operator==(const Quat2&, const Quat2&) = default;
  friend auto operator<=>(const Quat2&, const Quat2&) = default;
};

/// Product of two quaternions given in doubled coordinates, returned in doubled coordinates.
Quat2 quat2_mul(const Quat2& a, const Quat2& b);

/// The 24 Hurwitz quaternions of norm 1, in ascending (w, x, y, z) order.
std::vector<Quat2> hurwitz_units();

/// Their multiplicative group; element k is hurwitz_units()[k].
FiniteGroup hurwitz_unit_group();

}  // namespace finalg
