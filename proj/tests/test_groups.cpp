#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "finalg/arith.hpp"
#include "finalg/error.hpp"
#include "finalg/group_constructors.hpp"
#include "finalg/group_expr.hpp"
#include "finalg/group_structure.hpp"
#include "finalg/isomorphism.hpp"

using namespace finalg;

namespace {

std::vector<std::size_t> sizes(const std::vector<Subgroup>& subs) {
  std::vector<std::size_t> out;
  for (const auto& s : subs) out.push_back(s.size());
  return out;
}

std::vector<Subgroup> proper_nontrivial(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  for (auto& n : normal_subgroups(g))
    if (n.size() > 1 && n.size() < g.order()) out.push_back(n);
  return out;
}

}  // namespace

TEST_CASE("standard constructors") {
  CHECK(cyclic(1).order() == 1);
  CHECK(trivial_group().order() == 1);
  CHECK(order_spectrum(dihedral(8)) == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 5}, {4, 2}});
  CHECK(order_spectrum(quaternion8()).at(2) == 1);
  CHECK(symmetric(4).order() == 24);
  CHECK(alternating(4).order() == 12);
  CHECK_THROWS_AS(dihedral(7), BadParameter);
  CHECK_THROWS_AS(dihedral(0), BadParameter);
  CHECK_THROWS_AS(symmetric(6), BadParameter);
  CHECK_THROWS_AS(cyclic(0), BadParameter);
}

TEST_CASE("constructor soundness") {
  std::vector<FiniteGroup> corpus = {trivial_group(), cyclic(12),  dihedral(2),   dihedral(4),  dihedral(12),
                                     quaternion8(),   symmetric(3), symmetric(4), alternating(4), holomorph(12),
                                     holomorph(9),    agl1(4),      agl1(9),      gl2(3).group,  sl2(5).group,
                                     direct_product(dihedral(8), dihedral(6))};
  for (const auto& g : corpus) {
    INFO(g.label());
    CHECK(satisfies_group_axioms(g));
  }
}

TEST_CASE("direct_product") {
  const FiniteGroup d8 = dihedral(8);
  CHECK(is_isomorphic(direct_product(d8, trivial_group()), d8).isomorphic);
  CHECK(direct_product(d8, dihedral(6)).order() == 48);
  CHECK_FALSE(is_isomorphic(direct_product(cyclic(2), cyclic(2)), cyclic(4)).isomorphic);
  Bounds small;
  small.max_elements = 40;
  CHECK_THROWS_AS(direct_product(d8, dihedral(6), small), SizeExceeded);
}

TEST_CASE("holomorph") {
  CHECK(is_isomorphic(holomorph(4), dihedral(8)).isomorphic);
  CHECK(is_isomorphic(holomorph(3), symmetric(3)).isomorphic);
  CHECK(holomorph(12).order() == 48);
  for (std::uint64_t n = 1; n <= 30; ++n) CHECK(holomorph(n).order() == n * euler_phi(n));
  // (a, b) acts as x -> b x + a, composed left to right.
  const std::uint64_t n = 10;
  const FiniteGroup h = holomorph(n);
  for (Element x = 0; x < h.order(); ++x)
    for (Element y = 0; y < h.order(); ++y) {
      const AffinePair p = holomorph_decode(n, x), q = holomorph_decode(n, y), r = holomorph_decode(n, h.mul(x, y));
      for (std::uint64_t t = 0; t < n; ++t) REQUIRE((r.b * t + r.a) % n == (q.b * ((p.b * t + p.a) % n) + q.a) % n);
    }
  Bounds small;
  small.max_elements = 100;
  CHECK_THROWS_AS(holomorph(20, small), SizeExceeded);
}

TEST_CASE("holomorph above the table threshold uses the evaluator") {
  Bounds b;
  b.table_threshold = 100;
  const FiniteGroup h = holomorph(25, b);
  CHECK_FALSE(h.has_table());
  CHECK(h.order() == 500);
  CHECK(center(h).size() == 1);
  CHECK(satisfies_group_axioms(h, 0, 2000));
  CHECK_THROWS_AS(conjugacy_classes(h), SizeExceeded);
}

TEST_CASE("agl1") {
  CHECK(is_isomorphic(agl1(2), cyclic(2)).isomorphic);
  CHECK(agl1(4).order() == 12);
  CHECK(is_isomorphic(agl1(4), alternating(4)).isomorphic);
  CHECK(is_isomorphic(agl1(3), symmetric(3)).isomorphic);
  CHECK_THROWS_AS(agl1(6), BadParameter);
}

TEST_CASE("gl2 and sl2") {
  CHECK(sl2(2).group.order() == gl2(2).group.order());
  CHECK(is_isomorphic(sl2(2).group, symmetric(3)).isomorphic);
  CHECK(sl2(3).group.order() == 24);
  CHECK(sl2(5).group.order() == 120);
  CHECK(gl2(3).group.order() == 48);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) CHECK(sl2(q).group.order() == q * q * q - q);
}

TEST_CASE("uc") {
  for (std::uint64_t q : {3, 5, 7, 9, 11, 13}) {
    INFO("q = " << q);
    const LinearGroup s = sl2(q);
    const Subgroup u = uc(s);
    CHECK(u.size() == (q % 4 == 1 ? q - 1 : q + 1));
    CHECK(is_subgroup(s.group, u));
    CHECK(is_cyclic(subgroup_as_group(s.group, u, "UC")));
  }
  CHECK(centralizer(sl2(5).group, uc(sl2(5)).members) == uc(sl2(5)));
  CHECK_THROWS_AS(uc(sl2(4)), BadParameter);
}

TEST_CASE("element_order") {
  CHECK(element_order(cyclic(12), 0) == 1);
  CHECK(element_order(cyclic(12), 1) == 12);
  CHECK(element_order(quaternion8(), 1) == 2);
}

TEST_CASE("center and centralizer") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) CHECK(center(sl2(q).group).size() == std::gcd<std::uint64_t>(2, q - 1));
  CHECK(center(holomorph(7)).size() == 1);
  CHECK(center(holomorph(8)).size() == 2);
  const FiniteGroup g = dihedral(12);
  const Element id[] = {g.identity()};
  CHECK(centralizer(g, id).size() == g.order());
  const Subgroup z5 = holomorph_translations(5);
  CHECK(centralizer(holomorph(5), z5.members) == z5);
}

TEST_CASE("conjugacy classes") {
  const FiniteGroup ab = cyclic(10);
  CHECK(conjugacy_classes(ab).size() == 10);
  std::multiset<std::size_t> s3;
  for (const auto& c : conjugacy_classes(symmetric(3))) s3.insert(c.size());
  CHECK(s3 == std::multiset<std::size_t>{1, 2, 3});
  const auto classes = conjugacy_classes(sl2(3).group);
  CHECK(classes.size() == 7);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.size();
  CHECK(total == 24);
}

TEST_CASE("normal subgroups") {
  const FiniteGroup s = sl2(3).group;
  CHECK(sizes(normal_subgroups(s)) == std::vector<std::size_t>{1, 2, 8, 24});
  const auto sl22 = proper_nontrivial(sl2(2).group);
  REQUIRE(sl22.size() == 1);
  CHECK(is_cyclic(subgroup_as_group(sl2(2).group, sl22[0], "N")));
  CHECK(sl22[0].size() == 3);
  const FiniteGroup g = gl2(3).group;
  const auto gl = proper_nontrivial(g);
  CHECK(sizes(gl) == std::vector<std::size_t>{2, 8, 24});
  CHECK(is_isomorphic(subgroup_as_group(g, gl[1], "N"), quaternion8()).isomorphic);
  CHECK(is_isomorphic(subgroup_as_group(g, gl[2], "N"), s).isomorphic);
  CHECK(sizes(proper_nontrivial(sl2(5).group)) == std::vector<std::size_t>{2});
  for (const auto& n : normal_subgroups(symmetric(4))) CHECK(is_normal(symmetric(4), n));
  CHECK(sizes(normal_subgroups(symmetric(4))) == std::vector<std::size_t>{1, 4, 12, 24});
}

TEST_CASE("normal subgroups of Hol(Z_n) meet the translations") {
  for (std::uint64_t n = 1; n <= 16; ++n) {
    const FiniteGroup h = holomorph(n);
    const Subgroup zn = holomorph_translations(n);
    for (const auto& sub : normal_subgroups(h)) {
      if (sub.size() == 1) continue;
      const bool meets = std::any_of(sub.members.begin(), sub.members.end(),
                                     [&](Element e) { return e != h.identity() && zn.contains(e); });
      CHECK(meets);
    }
  }
}

TEST_CASE("normal 2-subgroups of Hol(Z_4m) lie in the Hol(Z_4) factor") {
  for (std::uint64_t m : {1, 3, 5, 7}) {
    const std::uint64_t n = 4 * m;
    for (const auto& sub : normal_subgroups(holomorph(n))) {
      if (!is_p_group_order(sub.size(), 2)) continue;
      for (Element e : sub.members) {
        const AffinePair p = holomorph_decode(n, e);
        CHECK(p.a % m == 0);
        CHECK(p.b % m == 1 % m);
      }
    }
  }
}

TEST_CASE("derived subgroup and abelianization") {
  CHECK(abelianization_order(agl1(4)) == 3);
  CHECK(abelianization_order(symmetric(3)) == 2);
  CHECK(abelianization_order(cyclic(6)) == 6);
  CHECK(derived_subgroup(sl2(3).group).size() == 8);
  CHECK(abelianization_spectrum(direct_product(cyclic(2), cyclic(2))) ==
        std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}});
}

TEST_CASE("group expressions") {
  const GroupExpr d8 = {GroupExpr::Kind::Dihedral, 8, {}};
  const GroupExpr d6 = {GroupExpr::Kind::Dihedral, 6, {}};
  const GroupExpr prod = {GroupExpr::Kind::Product, 1, {d8, d6}};
  CHECK(to_string(prod) == "D8 x D6");
  CHECK(build_group(prod).order() == 48);
  CHECK(build_group({GroupExpr::Kind::Uc, 7, {}}).order() == 8);
  CHECK(to_string(GroupExpr{GroupExpr::Kind::Holomorph, 12, {}}) == "Hol(12)");
}
