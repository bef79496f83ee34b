#include "finalg/hurwitz.hpp"

#include <algorithm>

#include "finalg/error.hpp"

namespace finalg {

Quat2 quat2_mul(const Quat2& a, const Quat2& b) {
  // (2a)(2b) = 4ab, so halve once to get 2ab. Exact for Hurwitz integers.
  const int w = a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z;
  const int x = a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y;
  const int y = a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x;
  const int z = a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w;
  if (w % 2 || x % 2 || y % 2 || z % 2) throw InternalError("quat2_mul: product left the Hurwitz order");
  return {w / 2, x / 2, y / 2, z / 2};
}

std::vector<Quat2> hurwitz_units() {
  // Norm of the doubled coordinates is 4; coordinates all even or all odd.
  std::vector<Quat2> out;
  for (int w = -2; w <= 2; ++w)
    for (int x = -2; x <= 2; ++x)
      for (int y = -2; y <= 2; ++y)
        for (int z = -2; z <= 2; ++z) {
          const bool all_even = w % 2 == 0 && x % 2 == 0 && y % 2 == 0 && z % 2 == 0;
          const bool all_odd = w % 2 != 0 && x % 2 != 0 && y % 2 != 0 && z % 2 != 0;
          if ((all_even || all_odd) && w * w + x * x + y * y + z * z == 4) out.push_back({w, x, y, z});
        }
  return out;
}

FiniteGroup hurwitz_unit_group() {
  const auto units = hurwitz_units();
  const std::size_t n = units.size();
  auto index = [&](const Quat2& q) {
    auto it = std::lower_bound(units.begin(), units.end(), q);
    if (it == units.end() || !(*it == q)) throw InternalError("hurwitz: product is not a unit");
    return static_cast<Element>(it - units.begin());
  };
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index(quat2_mul(units[a], units[b]));
  return FiniteGroup::from_table(std::move(table), "Hurwitz units");
}

}  // namespace finalg
