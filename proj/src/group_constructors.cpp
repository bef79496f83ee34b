#include "finalg/group_constructors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <numeric>
#include <string>

#include "finalg/arith.hpp"
#include "finalg/error.hpp"

namespace finalg {

FiniteGroup trivial_group() {
  return FiniteGroup::from_table({0}, "C1");
}

FiniteGroup cyclic(std::uint64_t n, const Bounds& bounds) {
  if (n == 0) throw BadParameter("cyclic: order must be positive");
  return FiniteGroup::build(
      n, 0, [n](Element a, Element b) { return static_cast<Element>((std::uint64_t(a) + b) % n); },
      [n](Element a) { return static_cast<Element>((n - a) % n); }, "C" + std::to_string(n), bounds);
}

FiniteGroup dihedral(std::uint64_t m, const Bounds& bounds) {
  if (m < 2 || m % 2 != 0) throw BadParameter("dihedral: order must be even and at least 2, got " + std::to_string(m));
  const std::uint64_t h = m / 2;
  auto mul = [h](Element x, Element y) {
    std::uint64_t a = x % h, b = x / h, c = y % h, d = y / h;
    std::uint64_t rot = b ? (a + h - c) % h : (a + c) % h;
    return static_cast<Element>(((b + d) % 2) * h + rot);
  };
  auto inv = [h](Element x) {
    std::uint64_t a = x % h, b = x / h;
    return b ? x : static_cast<Element>((h - a) % h);
  };
  return FiniteGroup::build(m, 0, mul, inv, "D" + std::to_string(m), bounds);
}

FiniteGroup quaternion8() {
  // unit index u in {1, i, j, k}, sign s; element index 2u + s
  static constexpr int unit_mul[4][4][2] = {
      // {unit, negated}
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  std::vector<Element> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const auto& r = unit_mul[x / 2][y / 2];
      int sign = (x % 2) ^ (y % 2) ^ r[1];
      table[x * 8 + y] = static_cast<Element>(2 * r[0] + sign);
    }
  return FiniteGroup::from_table(std::move(table), "Q8");
}

namespace {

std::vector<std::vector<unsigned>> permutations_of(unsigned n) {
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<unsigned>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

FiniteGroup permutation_group(const std::vector<std::vector<unsigned>>& perms, std::string label) {
  const std::size_t n = perms.size();
  std::map<std::vector<unsigned>, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(perms[i], static_cast<Element>(i));
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<unsigned> c(perms[a].size());
      for (std::size_t x = 0; x < c.size(); ++x) c[x] = perms[a][perms[b][x]];
      table[a * n + b] = index.at(c);
    }
  return FiniteGroup::from_table(std::move(table), std::move(label));
}

bool is_even(const std::vector<unsigned>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

}  // namespace

FiniteGroup symmetric(unsigned n) {
  if (n < 1 || n > 5) throw BadParameter("symmetric: degree must be in 1..5, got " + std::to_string(n));
  return permutation_group(permutations_of(n), "S" + std::to_string(n));
}

FiniteGroup alternating(unsigned n) {
  if (n < 1 || n > 5) throw BadParameter("alternating: degree must be in 1..5, got " + std::to_string(n));
  auto perms = permutations_of(n);
  std::erase_if(perms, [](const auto& p) { return !is_even(p); });
  return permutation_group(perms, "A" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Bounds& bounds) {
  const std::uint64_t m = h.order();
  const std::uint64_t order = std::uint64_t(g.order()) * m;
  if (order > bounds.max_elements)
    throw SizeExceeded("direct_product: order " + std::to_string(order) + " exceeds the size bound");
  auto mul = [g, h, m](Element x, Element y) {
    return static_cast<Element>(g.mul(static_cast<Element>(x / m), static_cast<Element>(y / m)) * m +
                                h.mul(static_cast<Element>(x % m), static_cast<Element>(y % m)));
  };
  auto inv = [g, h, m](Element x) {
    return static_cast<Element>(g.inv(static_cast<Element>(x / m)) * m + h.inv(static_cast<Element>(x % m)));
  };
  return FiniteGroup::build(order, static_cast<Element>(g.identity() * m + h.identity()), mul, inv,
                            g.label() + " x " + h.label(), bounds);
}

// ---------------------------------------------------------------- holomorph

namespace {

struct UnitIndex {
  std::vector<std::uint64_t> units;
  std::vector<Element> position;  // residue -> index in units (or npos)
};

std::shared_ptr<const UnitIndex> unit_index(std::uint64_t n) {
  auto idx = std::make_shared<UnitIndex>();
  idx->units = units_mod(n);
  idx->position.assign(n, ~Element(0));
  for (std::size_t i = 0; i < idx->units.size(); ++i) idx->position[idx->units[i]] = static_cast<Element>(i);
  return idx;
}

}  // namespace

AffinePair holomorph_decode(std::uint64_t n, Element e) {
  auto units = units_mod(n);
  return {e / units.size(), units.at(e % units.size())};
}

Element holomorph_encode(std::uint64_t n, AffinePair p) {
  auto units = units_mod(n);
  auto it = std::lower_bound(units.begin(), units.end(), p.b % n);
  if (it == units.end() || *it != p.b % n) throw BadParameter("holomorph: multiplier is not a unit");
  return static_cast<Element>((p.a % n) * units.size() + (it - units.begin()));
}

Subgroup holomorph_translations(std::uint64_t n) {
  const std::uint64_t phi = euler_phi(n);
  Subgroup h;
  for (std::uint64_t a = 0; a < n; ++a) h.members.push_back(static_cast<Element>(a * phi));
  return h;
}

FiniteGroup holomorph(std::uint64_t n, const Bounds& bounds) {
  if (n == 0) throw BadParameter("holomorph: n must be positive");
  const std::uint64_t phi = euler_phi(n);
  if (n * phi > bounds.max_elements)
    throw SizeExceeded("holomorph: order " + std::to_string(n * phi) + " exceeds the size bound");
  auto idx = unit_index(n);
  auto mul = [n, phi, idx](Element x, Element y) {
    const std::uint64_t a = x / phi, b = idx->units[x % phi];
    const std::uint64_t a2 = y / phi, b2 = idx->units[y % phi];
    const std::uint64_t na = (b2 * a + a2) % n, nb = (b * b2) % n;
    return static_cast<Element>(na * phi + idx->position[nb]);
  };
  auto inv = [n, phi, idx](Element x) {
    const std::uint64_t a = x / phi, b = idx->units[x % phi];
    const std::uint64_t binv = n == 1 ? 0 : *inverse_mod(b, n);
    const std::uint64_t na = (n - (binv * a) % n) % n;
    return static_cast<Element>(na * phi + idx->position[binv]);
  };
  return FiniteGroup::build(n * phi, static_cast<Element>(idx->position[1 % n]), mul, inv,
                            "Hol(" + std::to_string(n) + ")", bounds);
}

FiniteGroup agl1(std::uint64_t q, const Bounds& bounds) {
  auto field = std::make_shared<const FqField>(fq_field_of_order(q, bounds));
  const std::uint64_t u = q - 1;
  if (q * u > bounds.max_elements)
    throw SizeExceeded("agl1: order " + std::to_string(q * u) + " exceeds the size bound");
  auto mul = [field, u](Element x, Element y) {
    const FqElem a{static_cast<std::uint32_t>(x / u)}, b{static_cast<std::uint32_t>(x % u + 1)};
    const FqElem a2{static_cast<std::uint32_t>(y / u)}, b2{static_cast<std::uint32_t>(y % u + 1)};
    const FqElem na = field->add(field->mul(b2, a), a2), nb = field->mul(b, b2);
    return static_cast<Element>(na.code * u + nb.code - 1);
  };
  auto inv = [field, u](Element x) {
    const FqElem a{static_cast<std::uint32_t>(x / u)}, b{static_cast<std::uint32_t>(x % u + 1)};
    const FqElem binv = field->inv(b);
    const FqElem na = field->neg(field->mul(binv, a));
    return static_cast<Element>(na.code * u + binv.code - 1);
  };
  return FiniteGroup::build(q * u, 0, mul, inv, "AGL1(" + std::to_string(q) + ")", bounds);
}

// ---------------------------------------------------------------- GL2 / SL2

namespace {

std::uint64_t mat_code(const Mat2& m, std::uint64_t q) {
  return ((std::uint64_t(m.a.code) * q + m.b.code) * q + m.c.code) * q + m.d.code;
}

LinearGroup linear_group(std::uint64_t q, bool special, const Bounds& bounds) {
  FqField field = fq_field_of_order(q, bounds);
  const std::uint64_t order = special ? q * q * q - q : (q * q - 1) * (q * q - q);
  const std::string label = std::string(special ? "SL2(" : "GL2(") + std::to_string(q) + ")";
  if (order > bounds.max_elements)
    throw SizeExceeded(label + ": order " + std::to_string(order) + " exceeds the size bound");
  const std::uint64_t q4 = q * q * q * q;
  if (q4 > 64 * bounds.max_elements) throw SizeExceeded(label + ": matrix index exceeds the size bound");

  auto data = std::make_shared<LinearGroup>(LinearGroup{field, {}, trivial_group(), {}});
  data->lookup.assign(q4, LinearGroup::npos);
  for (std::uint64_t code = 0; code < q4; ++code) {
    std::uint64_t r = code;
    Mat2 m;
    m.d = {static_cast<std::uint32_t>(r % q)};
    r /= q;
    m.c = {static_cast<std::uint32_t>(r % q)};
    r /= q;
    m.b = {static_cast<std::uint32_t>(r % q)};
    r /= q;
    m.a = {static_cast<std::uint32_t>(r)};
    const FqElem det = data->det(m);
    if (special ? det == field.one() : det != field.zero()) {
      data->lookup[code] = static_cast<Element>(data->matrices.size());
      data->matrices.push_back(m);
    }
  }
  if (data->matrices.size() != order) throw InternalError(label + ": unexpected group order");

  std::shared_ptr<const LinearGroup> shared = data;
  auto mul = [shared](Element x, Element y) {
    return shared->index_of(shared->mul(shared->matrices[x], shared->matrices[y]));
  };
  auto inv = [shared](Element x) {
    const auto& f = shared->field;
    const Mat2& m = shared->matrices[x];
    const FqElem di = f.inv(shared->det(m));
    return shared->index_of({f.mul(di, m.d), f.mul(di, f.neg(m.b)), f.mul(di, f.neg(m.c)), f.mul(di, m.a)});
  };
  Element identity = shared->index_of({field.one(), field.zero(), field.zero(), field.one()});
  FiniteGroup group = FiniteGroup::build(order, identity, mul, inv, label, bounds);
  LinearGroup out{field, data->matrices, group, data->lookup};
  return out;
}

}  // namespace

Element LinearGroup::index_of(const Mat2& m) const {
  return lookup[mat_code(m, field.order())];
}

Mat2 LinearGroup::mul(const Mat2& x, const Mat2& y) const {
  const auto& f = field;
  return {f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
          f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

FqElem LinearGroup::det(const Mat2& m) const { return field.sub(field.mul(m.a, m.d), field.mul(m.b, m.c)); }

LinearGroup gl2(std::uint64_t q, const Bounds& bounds) { return linear_group(q, false, bounds); }
LinearGroup sl2(std::uint64_t q, const Bounds& bounds) { return linear_group(q, true, bounds); }

Subgroup uc(const LinearGroup& sl2q) {
  const auto& f = sl2q.field;
  if (f.characteristic() == 2) throw BadParameter("uc: q must be odd");
  Subgroup h;
  for (std::size_t i = 0; i < sl2q.matrices.size(); ++i) {
    const Mat2& m = sl2q.matrices[i];
    // det = x^2 + y^2 = 1 already holds inside SL2
    if (m.a == m.d && m.c == f.neg(m.b)) h.members.push_back(static_cast<Element>(i));
  }
  return h;
}

}  // namespace finalg
