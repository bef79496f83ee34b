#include "finalg/ring_analysis.hpp"

#include <algorithm>

#include "finalg/error.hpp"

namespace finalg {
namespace {

void require_enumerable(const FiniteRing& r, const Bounds& bounds, const char* what) {
  if (r.size() > bounds.max_elements)
    throw SizeExceeded(std::string(what) + ": ring of " + std::to_string(r.size()) +
                       " elements exceeds the enumeration bound");
}

// inverse[x] for units, npos otherwise.
constexpr RingElem kNone = ~RingElem(0);

std::vector<RingElem> inverses(const FiniteRing& r) {
  const std::uint64_t n = r.size();
  std::vector<RingElem> inv(n, kNone);
  for (RingElem x = 0; x < n; ++x) {
    if (inv[x] != kNone) continue;
    for (RingElem y = 0; y < n; ++y) {
      if (r.mul(x, y) != r.one()) continue;
      if (r.mul(y, x) != r.one())
        throw InternalError("units: right inverse of " + std::to_string(x) + " in " + r.label() +
                            " is not a left inverse");
      inv[x] = y;
      inv[y] = x;
      break;
    }
  }
  return inv;
}

}  // namespace

UnitGroupResult units(const FiniteRing& r, const Bounds& bounds) {
  require_enumerable(r, bounds, "units");
  const auto inv = inverses(r);
  std::vector<RingElem> elems;
  std::vector<Element> pos(r.size(), ~Element(0));
  for (RingElem x = 0; x < r.size(); ++x)
    if (inv[x] != kNone) {
      pos[x] = static_cast<Element>(elems.size());
      elems.push_back(x);
    }
  auto mul = [r, elems, pos](Element a, Element b) { return pos[r.mul(elems[a], elems[b])]; };
  auto ginv = [elems, pos, inv](Element a) { return pos[inv[elems[a]]]; };
  FiniteGroup g = FiniteGroup::build(elems.size(), pos[r.one()], mul, ginv, "units(" + r.label() + ")", bounds);
  return {std::move(g), std::move(elems)};
}

std::vector<RingElem> jacobson_radical(const FiniteRing& r, const Bounds& bounds) {
  require_enumerable(r, bounds, "jacobson_radical");
  const auto inv = inverses(r);
  std::vector<RingElem> out;
  for (RingElem x = 0; x < r.size(); ++x) {
    bool ok = true;
    for (RingElem y = 0; y < r.size() && ok; ++y) ok = inv[r.sub(r.one(), r.mul(y, x))] != kNone;
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<RingElem> center_ring(const FiniteRing& r, const Bounds& bounds) {
  require_enumerable(r, bounds, "center_ring");
  std::vector<RingElem> out;
  for (RingElem z = 0; z < r.size(); ++z) {
    bool ok = true;
    for (RingElem y = 0; y < r.size() && ok; ++y) ok = r.mul(z, y) == r.mul(y, z);
    if (ok) out.push_back(z);
  }
  return out;
}

std::optional<std::uint64_t> ring_element_order(const FiniteRing& r, RingElem u) {
  // A unit returns to 1 within |R| steps; a non-unit never does.
  RingElem x = u;
  for (std::uint64_t m = 1; m <= r.size(); ++m) {
    if (x == r.one()) return m;
    x = r.mul(x, u);
  }
  return std::nullopt;
}

}  // namespace finalg
