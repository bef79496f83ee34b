#include "finalg/group_ring.hpp"


#include "finalg/error.hpp"
#include "finalg/group_structure.hpp"

namespace finalg {

GroupRingArith::GroupRingArith(std::uint32_t t, FiniteGroup g) : t_(t), g_(std::move(g)) {
  if (t < 2) throw BadParameter("group ring: coefficient modulus must be at least 2");
  g_.require_table("group ring arithmetic");
}

CoeffVec GroupRingArith::basis(Element g) const {
  CoeffVec v(t_, g_.order());
  v.set(g, 1);
  return v;
}

CoeffVec GroupRingArith::from_terms(std::span<const std::pair<std::int64_t, Element>> terms) const {
  std::vector<std::int64_t> acc(g_.order(), 0);
  for (const auto& [coef, g] : terms) acc.at(g) += coef;
  CoeffVec v(t_, g_.order());
  for (std::size_t i = 0; i < acc.size(); ++i) v.set(i, acc[i]);
  return v;
}

CoeffVec GroupRingArith::mul(const CoeffVec& a, const CoeffVec& b) const {
  if (a.size() != g_.order() || b.size() != g_.order() || a.modulus() != t_ || b.modulus() != t_)
    throw LengthMismatch("group ring: operand does not belong to this ring");
  std::vector<std::uint64_t> acc(g_.order(), 0);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!a[x]) continue;
    for (std::size_t y = 0; y < b.size(); ++y)
      if (b[y]) acc[g_.mul(Element(x), Element(y))] += std::uint64_t(a[x]) * b[y];
  }
  std::vector<std::uint32_t> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i] % t_);
  return CoeffVec(t_, std::move(out));
}

CoeffVec GroupRingArith::pow(CoeffVec a, std::uint64_t e) const {
  CoeffVec result = one();
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

CoeffVec GroupRingArith::left_mul(Element g, const CoeffVec& v) const {
  std::vector<std::uint32_t> out(v.size(), 0);
  for (std::size_t h = 0; h < v.size(); ++h) out[g_.mul(g, Element(h))] = v[h];
  return CoeffVec(t_, std::move(out));
}

CoeffVec GroupRingArith::right_mul(const CoeffVec& v, Element g) const {
  std::vector<std::uint32_t> out(v.size(), 0);
  for (std::size_t h = 0; h < v.size(); ++h) out[g_.mul(Element(h), g)] = v[h];
  return CoeffVec(t_, std::move(out));
}

std::optional<std::uint64_t> GroupRingArith::element_order(const CoeffVec& u, std::uint64_t limit) const {
  const CoeffVec e = one();
  CoeffVec x = u;
  for (std::uint64_t m = 1; m <= limit; ++m) {
    if (x == e) return m;
    x = mul(x, u);
  }
  return std::nullopt;
}

namespace {

IdealBasis closure_by(const GroupRingArith& zg, std::span<const CoeffVec> gens, const std::vector<Element>& elems) {
  std::vector<LinearOperator> ops;
  for (Element g : elems) {
    ops.emplace_back([&zg, g](const CoeffVec& v) { return zg.left_mul(g, v); });
    ops.emplace_back([&zg, g](const CoeffVec& v) { return zg.right_mul(v, g); });
  }
  return {closure_under_operators(gens, ops, zg.modulus(), zg.dimension())};
}

}  // namespace

IdealBasis group_ring_ideal(const GroupRingArith& zg, std::span<const CoeffVec> gens) {
  return closure_by(zg, gens, generating_set(zg.group()));
}

IdealBasis group_ring_ideal_all_elements(const GroupRingArith& zg, std::span<const CoeffVec> gens) {
  std::vector<Element> all(zg.dimension());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = Element(i);
  return closure_by(zg, gens, all);
}

EmbeddingResult group_embedding_injective(const GroupRingArith& zg, const IdealBasis& ideal) {
  const FiniteGroup& g = zg.group();
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (Element(x) == g.identity()) continue;
    const CoeffVec diff = zg.from_terms({{1, Element(x)}, {-1, g.identity()}});
    if (ideal.contains(diff)) return {false, std::pair{Element(x), g.identity()}};
  }
  return {true, std::nullopt};
}

Sl23Notation sl23_notation(std::optional<Element> c) {
  LinearGroup sl = sl2(3);
  const FqField& f = sl.field;
  auto mat = [&](int a, int b, int cc, int d) {
    return Mat2{f.from_int(a), f.from_int(b), f.from_int(cc), f.from_int(d)};
  };
  const FiniteGroup& g = sl.group;
  Sl23Notation s{sl, g.identity(), 0, 0, 0, 0, 0, {}, {}};
  s.i = sl.index_of(mat(0, -1, 1, 0));
  s.j = sl.index_of(mat(1, 1, 1, -1));
  s.k = g.mul(s.i, s.j);
  s.minus_one = g.mul(s.i, s.i);
  for (std::size_t x = 0; x < g.order(); ++x) {
    const std::uint64_t o = element_order(g, Element(x));
    if (o == 3) s.order_three.push_back(Element(x));
    if (o == 1 || o == 2 || o == 4) s.q8.push_back(Element(x));
  }
  s.c = c.value_or(s.order_three.front());
  if (element_order(g, s.c) != 3) throw BadParameter("sl23_notation: c must have order 3");
  return s;
}

CoeffVec sl23_unit_a(const GroupRingArith& zg, const Sl23Notation& s) {
  const FiniteGroup& g = zg.group();
  return zg.from_terms({{1, s.one}, {1, g.mul(s.c, s.j)}, {1, g.mul(s.minus_one, s.c)}});
}

CoeffVec sl23_unit_b(const GroupRingArith& zg, const Sl23Notation& s) {
  const FiniteGroup& g = zg.group();
  return zg.from_terms({{1, s.j}, {1, s.c}, {1, g.mul(s.c, s.i)}});
}

}  // namespace finalg
