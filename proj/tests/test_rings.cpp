#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "finalg/error.hpp"
#include "finalg/finite_ring.hpp"
#include "finalg/group_constructors.hpp"
#include "finalg/group_structure.hpp"
#include "finalg/hurwitz.hpp"
#include "finalg/isomorphism.hpp"
#include "finalg/parse.hpp"
#include "finalg/ring_analysis.hpp"

using namespace finalg;

namespace {

FiniteRing ring(const char* text) { return build_ring(parse_ring_expr(text)); }

const char* const kCatalog[] = {"Z4",       "Z6",     "F2",       "F4",        "F9",       "M(2,F2)",     "M(2,Z4)",
                                "U(3,F2)",  "U(2,F3)", "TP(F3,2)", "TP(Z4,3)",  "GR(2,D6)", "GR(3,C4)",    "GR(2,Q8)",
                                "End(4,2)", "End(2,2)", "Z4 x F3",  "F2 x U(2,F3)", "M(2,F2) x End(4,2)"};

}  // namespace

TEST_CASE("sizes and characteristics") {
  CHECK(ring("Z4").size() == 4);
  CHECK(ring("M(2,F2)").size() == 16);
  CHECK(ring("End(4,2)").size() == 32);
  CHECK(ring("U(3,F2)").size() == 64);
  CHECK(ring("GR(2,D6)").size() == 64);
  CHECK(ring("TP(F3,2)").size() == 9);
  CHECK(characteristic(ring("Z4 x M(2,F2)")) == 4);
  CHECK(characteristic(ring("F2 x U(2,F3)")) == 6);
  CHECK(characteristic(ring("F9")) == 3);
  CHECK(characteristic(ring("End(4,2)")) == 4);
  CHECK(ring_size(parse_ring_expr("U(3,F2) x M(2,F2)")) == 1024);
}

TEST_CASE("bound on ring size") {
  CHECK_THROWS_AS(build_ring(parse_ring_expr("GR(2, SL2(3))")), SizeExceeded);
  Bounds small;
  small.max_elements = 50;
  CHECK_THROWS_AS(build_ring(parse_ring_expr("U(3,F2)"), small), SizeExceeded);
  CHECK(ring_size(parse_ring_expr("M(9,F9)")) == UINT64_MAX);
}

TEST_CASE("unit groups") {
  CHECK(is_isomorphic(units(ring("M(2,F2)")).group, symmetric(3)).isomorphic);
  CHECK(is_isomorphic(units(ring("TP(F3,2)")).group, cyclic(6)).isomorphic);
  CHECK(is_isomorphic(units(ring("GR(2,D6)")).group, dihedral(12)).isomorphic);
  CHECK(is_isomorphic(units(ring("U(3,F2)")).group, dihedral(8)).isomorphic);
  CHECK(is_isomorphic(units(ring("End(4,2)")).group, dihedral(8)).isomorphic);
  CHECK(units(ring("F9")).group.order() == 8);
  CHECK(is_isomorphic(units(ring("F9")).group, cyclic(8)).isomorphic);
  CHECK(units(ring("M(2,F3)")).group.order() == 48);
  CHECK(units(ring("Z6")).group.order() == 2);
}

TEST_CASE("units embed into the ring") {
  for (const char* text : kCatalog) {
    INFO(text);
    const FiniteRing r = ring(text);
    const UnitGroupResult u = units(r);
    const auto& emb = u.embedding();
    REQUIRE(emb.size() == u.group.order());
    CHECK(std::is_sorted(emb.begin(), emb.end()));
    CHECK(emb[u.group.identity()] == r.one());
    for (Element a = 0; a < u.group.order(); ++a)
      for (Element b = 0; b < u.group.order(); ++b) REQUIRE(emb[u.group.mul(a, b)] == r.mul(emb[a], emb[b]));
    // Every nonzero element of a field is a unit; here count invertibles directly.
    std::uint64_t count = 0;
    for (RingElem x = 0; x < r.size(); ++x)
      for (RingElem y = 0; y < r.size(); ++y)
        if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) {
          ++count;
          break;
        }
    CHECK(count == emb.size());
  }
}

TEST_CASE("units of a product is the product of units") {
  const std::pair<const char*, const char*> pairs[] = {{"Z4", "F3"}, {"M(2,F2)", "Z4"}, {"F2", "U(2,F3)"}, {"TP(F3,2)", "F4"}};
  for (const auto& [a, b] : pairs) {
    const std::string both = std::string(a) + " x " + b;
    INFO(both);
    const FiniteGroup whole = units(ring(both.c_str())).group;
    const FiniteGroup parts = direct_product(units(ring(a)).group, units(ring(b)).group);
    CHECK(is_isomorphic(whole, parts).isomorphic);
  }
}

TEST_CASE("Jacobson radical") {
  CHECK(jacobson_radical(ring("M(2,F2)")) == std::vector<RingElem>{ring("M(2,F2)").zero()});
  const FiniteRing z4 = ring("Z4");
  std::vector<RingElem> expected{z4.zero(), z4.add(z4.one(), z4.one())};
  std::sort(expected.begin(), expected.end());
  CHECK(jacobson_radical(z4) == expected);
  CHECK(jacobson_radical(ring("U(3,F2)")).size() == 8);
  CHECK(jacobson_radical(ring("TP(F3,2)")).size() == 3);
  CHECK(jacobson_radical(ring("GR(2,D6)")).size() == 2);
  for (const char* text : {"F2", "F4", "F9", "M(2,F2)", "M(2,F3)", "Z6"}) {
    INFO(text);
    CHECK(jacobson_radical(ring(text)).size() == 1);
  }
}

TEST_CASE("radical is a two-sided ideal and 1 + J is normal in the units") {
  for (const char* text : kCatalog) {
    INFO(text);
    const FiniteRing r = ring(text);
    const auto rad = jacobson_radical(r);
    const std::set<RingElem> j(rad.begin(), rad.end());
    for (RingElem x : rad) {
      for (RingElem y : rad) REQUIRE(j.count(r.add(x, y)));
      for (RingElem s = 0; s < r.size(); ++s) {
        REQUIRE(j.count(r.mul(s, x)));
        REQUIRE(j.count(r.mul(x, s)));
      }
    }
    const UnitGroupResult u = units(r);
    const auto& emb = u.embedding();
    std::vector<Element> members;
    for (Element g = 0; g < emb.size(); ++g)
      if (j.count(r.sub(emb[g], r.one()))) members.push_back(g);
    CHECK(members.size() == rad.size());
    const std::set<Element> m(members.begin(), members.end());
    for (Element g = 0; g < u.group.order(); ++g)
      for (Element h : members) REQUIRE(m.count(u.group.mul(u.group.mul(g, h), u.group.inv(g))));
  }
}

TEST_CASE("center") {
  CHECK(center_ring(ring("M(2,F3)")).size() == 3);
  CHECK(center_ring(ring("M(2,F2)")).size() == 2);
  CHECK(center_ring(ring("F9")).size() == 9);
  // The center of Z_2[G] has the class sums as a basis.
  const FiniteRing gr = ring("GR(2,Q8)");
  CHECK(center_ring(gr).size() == 32);
  CHECK(conjugacy_classes(quaternion8()).size() == 5);
  std::vector<RingElem> brute;
  for (RingElem z = 0; z < gr.size(); ++z) {
    bool central = true;
    for (RingElem s = 0; s < gr.size() && central; ++s) central = gr.mul(z, s) == gr.mul(s, z);
    if (central) brute.push_back(z);
  }
  CHECK(center_ring(gr) == brute);
}

TEST_CASE("ring axioms on the catalog") {
  for (const char* text : kCatalog) {
    INFO(text);
    CHECK(satisfies_ring_axioms(ring(text)));
  }
  CHECK(satisfies_ring_axioms(ring("U(3,F2) x M(2,F2)"), 512, 20000));
}

TEST_CASE("a broken multiplication fails the axioms") {
  const FiniteRing bad = FiniteRing::make(
      4, 0, 1, [](RingElem a, RingElem b) { return (a + b) % 4; }, [](RingElem a, RingElem b) { return (a * b + a) % 4; },
      [](RingElem a) { return (4 - a) % 4; }, "bad");
  CHECK_FALSE(satisfies_ring_axioms(bad));
  CHECK_THROWS_AS(FiniteRing::make(1, 0, 0, nullptr, nullptr, nullptr, "tiny"), BadParameter);
}

TEST_CASE("element orders") {
  const FiniteRing f9 = ring("F9");
  std::multiset<std::uint64_t> orders;
  for (RingElem x = 0; x < f9.size(); ++x)
    if (auto o = ring_element_order(f9, x)) orders.insert(*o);
  CHECK(orders.count(8) == 4);
  CHECK(orders.count(4) == 2);
  CHECK(orders.count(2) == 1);
  CHECK(orders.count(1) == 1);
  CHECK_FALSE(ring_element_order(f9, f9.zero()));
  const FiniteRing z4 = ring("Z4");
  CHECK_FALSE(ring_element_order(z4, z4.add(z4.one(), z4.one())));
  CHECK(ring_element_order(z4, z4.neg(z4.one())) == 2u);
}

TEST_CASE("Hurwitz units") {
  const auto h = hurwitz_units();
  CHECK(h.size() == 24);
  const FiniteGroup g = hurwitz_unit_group();
  CHECK(g.order() == 24);
  CHECK(is_isomorphic(g, sl2(3).group).isomorphic);
  CHECK_FALSE(is_isomorphic(g, symmetric(4)).isomorphic);
  for (const Quat2& u : h) CHECK(u.w * u.w + u.x * u.x + u.y * u.y + u.z * u.z == 4);
}
