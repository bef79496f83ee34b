#include "finalg/verifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "finalg/arith.hpp"
#include "finalg/error.hpp"
#include "finalg/group_constructors.hpp"
#include "finalg/group_ring.hpp"
#include "finalg/group_structure.hpp"
#include "finalg/hurwitz.hpp"
#include "finalg/isomorphism.hpp"
#include "finalg/parallel.hpp"
#include "finalg/parse.hpp"
#include "finalg/ring_analysis.hpp"

namespace finalg {

using nlohmann::json;

namespace {

// Fills status and counts from the per-case "ok" flags; informational
// entries are skipped.
CheckReport finish(std::string name, json witnesses, const Stopwatch& clock) {
  CheckReport r;
  r.check_name = std::move(name);
  bool all_ok = true;
  for (const auto& w : witnesses) {
    if (w.value("informational", false)) continue;
    ++r.cases_total;
    ++r.cases_examined;
    all_ok = all_ok && w.at("ok").get<bool>();
  }
  r.status = all_ok ? CheckStatus::Pass : CheckStatus::Fail;
  r.witnesses = std::move(witnesses);
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

json info(json body) {
  body["informational"] = true;
  return body;
}

std::string multiset_string(const std::vector<std::uint64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace

// ---------------------------------------------------------------- units table

CheckReport verify_units_table(const VerifyOptions& opt) {
  Stopwatch clock;
  struct Row {
    std::uint64_t c, n;
    const char* ring;
  };
  static const std::vector<Row> rows = {
      {1, 1, "{0}"},         {2, 1, "F2"},           {2, 2, "TP(F2,2)"},       {2, 3, "M(2,F2)"},
      {2, 4, "U(3,F2)"},     {2, 6, "GR(2,D6)"},     {2, 12, "U(3,F2) x M(2,F2)"}, {3, 2, "F3"},
      {3, 6, "U(2,F3)"},     {4, 2, "Z4"},           {4, 4, "End(4,2)"},       {4, 6, "Z4 x M(2,F2)"},
      {4, 12, "M(2,F2) x End(4,2)"}, {6, 2, "Z6"},   {6, 6, "F2 x U(2,F3)"},
  };
  std::vector<json> out(rows.size());
  parallel_for(rows.size(), opt.jobs, [&](std::size_t k) {
    const Row& row = rows[k];
    json w = {{"c", row.c}, {"n", row.n}, {"ring", row.ring}};
    const FiniteGroup hol = holomorph(row.n, opt.bounds);
    if (row.c == 1) {
      // In the one-element ring 0 = 1, so its unit group is {0}: trivial, like Hol(Z_1).
      const bool iso = is_isomorphic(trivial_group(), hol).isomorphic;
      w.update({{"ring_size", 1}, {"characteristic", 1}, {"unit_order", 1}, {"isomorphic", iso}, {"ok", iso}});
    } else {
      const FiniteRing ring = build_ring(parse_ring_expr(row.ring), opt.bounds);
      const UnitGroupResult u = units(ring, opt.bounds);
      const IsoResult iso = is_isomorphic(u.group, hol);
      w.update({{"ring_size", ring.size()},
                {"characteristic", ring.characteristic()},
                {"unit_order", u.group.order()},
                {"isomorphic", iso.isomorphic},
                {"ok", iso.isomorphic && ring.characteristic() == row.c}});
      if (!iso.isomorphic) w["obstruction"] = iso.obstruction;
    }
    out[k] = std::move(w);
  });
  return finish("units_table", json(out), clock);
}

// ------------------------------------------------------------- SL_2(F_3) cases

namespace {

std::string q8_name(const Sl23Notation& s, Element x) {
  const FiniteGroup& g = s.sl.group;
  const std::pair<Element, const char*> names[] = {{s.one, "1"}, {s.i, "i"}, {s.j, "j"}, {s.k, "k"}};
  for (const auto& [e, n] : names) {
    if (x == e) return n;
    if (x == g.mul(s.minus_one, e)) return std::string("-") + n;
  }
  return "g" + std::to_string(x);
}

json pair_json(const std::optional<std::pair<Element, Element>>& p) {
  if (!p) return nullptr;
  return json::array({p->first, p->second});
}

struct IdealCase {
  std::size_t rank = 0;
  EmbeddingResult embedding;
  bool two_r_ok = true;
};

std::vector<IdealCase> run_char2(const Sl23Notation& s, unsigned jobs) {
  const GroupRingArith zg(2, s.sl.group);
  const CoeffVec a = sl23_unit_a(zg, s), b = sl23_unit_b(zg, s);
  std::vector<IdealCase> cases(64);
  parallel_for(64, jobs, [&](std::size_t idx) {
    const CoeffVec gens[] = {a + zg.basis(s.q8[idx / 8]), b + zg.basis(s.q8[idx % 8])};
    const IdealBasis ideal = group_ring_ideal(zg, gens);
    cases[idx] = {ideal.rank(), group_embedding_injective(zg, ideal), true};
  });
  return cases;
}

enum class Char4Variant { Derived, Printed, PlusV };

const char* variant_name(Char4Variant v) {
  switch (v) {
    case Char4Variant::Derived: return "(1+i^2, i+j+k+eps, x-v)";
    case Char4Variant::Printed: return "(1+i^2, 1+j+k+eps, x+v)";
    case Char4Variant::PlusV: return "(1+i^2, i+j+k+eps, x+v)";
  }
  return "";
}

std::vector<Element> char4_v_values(const Sl23Notation& s) {
  std::vector<Element> v{s.one};
  v.insert(v.end(), s.order_three.begin(), s.order_three.end());
  return v;
}

std::vector<IdealCase> run_char4(const Sl23Notation& s, Char4Variant variant, unsigned jobs) {
  const GroupRingArith zg(4, s.sl.group);
  const FiniteGroup& g = s.sl.group;
  const auto vs = char4_v_values(s);
  const CoeffVec x = zg.from_terms({{1, s.one}, {1, s.c}, {1, s.i}});
  const CoeffVec one_plus_i2 = zg.from_terms({{1, s.one}, {1, s.minus_one}});
  std::vector<IdealCase> cases(2 * vs.size());
  parallel_for(cases.size(), jobs, [&](std::size_t idx) {
    const std::int64_t eps = idx / vs.size() == 0 ? 1 : -1;
    const Element v = vs[idx % vs.size()];
    const CoeffVec second = variant == Char4Variant::Printed
                                ? zg.from_terms({{1, s.one}, {1, s.j}, {1, s.k}, {eps, s.one}})
                                : zg.from_terms({{1, s.i}, {1, s.j}, {1, s.k}, {eps, s.one}});
    const CoeffVec third = variant == Char4Variant::Derived ? x - zg.basis(v) : x + zg.basis(v);
    const CoeffVec gens[] = {one_plus_i2, second, third};
    const IdealBasis ideal = group_ring_ideal(zg, gens);
    IdealCase c{ideal.rank(), group_embedding_injective(zg, ideal), true};
    for (std::size_t r = 0; r < g.order() && c.two_r_ok; ++r)
      c.two_r_ok = ideal.contains(zg.from_terms({{2, Element(r)}, {-2, s.one}}));
    cases[idx] = c;
  });
  return cases;
}

struct Char4Lemmas {
  bool square_literal, square_mod;  // (i+j+k)^2 = 1
  bool cube_literal, cube_mod;      // x^3 = 1 + (c^2 - c)(i+j+k-1)
};

// "mod" means the difference lies in the ideal (1 + i^2, 2r - 2 : r in G).
Char4Lemmas char4_lemmas(const Sl23Notation& s) {
  const GroupRingArith zg(4, s.sl.group);
  const FiniteGroup& g = s.sl.group;
  std::vector<CoeffVec> gens{zg.from_terms({{1, s.one}, {1, s.minus_one}})};
  for (std::size_t r = 0; r < g.order(); ++r) gens.push_back(zg.from_terms({{2, Element(r)}, {-2, s.one}}));
  const IdealBasis base = group_ring_ideal(zg, gens);

  const CoeffVec ijk = zg.from_terms({{1, s.i}, {1, s.j}, {1, s.k}});
  const CoeffVec square_diff = zg.mul(ijk, ijk) - zg.one();
  const CoeffVec x = zg.from_terms({{1, s.one}, {1, s.c}, {1, s.i}});
  const CoeffVec c2_minus_c = zg.from_terms({{1, g.mul(s.c, s.c)}, {-1, s.c}});
  const CoeffVec rhs = zg.one() + zg.mul(c2_minus_c, ijk - zg.one());
  const CoeffVec cube_diff = zg.pow(x, 3) - rhs;
  return {square_diff.is_zero(), base.contains(square_diff), cube_diff.is_zero(), base.contains(cube_diff)};
}

json lemma_json(const Char4Lemmas& l) {
  return {{"square_literal_in_Z4G", l.square_literal},
          {"square_mod_ideal", l.square_mod},
          {"cube_literal_in_Z4G", l.cube_literal},
          {"cube_mod_ideal", l.cube_mod}};
}

bool char4_case_ok(const IdealCase& c) { return !c.embedding.injective && c.two_r_ok; }

// The first order-3 element not conjugate to s.c.
Element alternative_c(const Sl23Notation& s) {
  for (const auto& cls : conjugacy_classes(s.sl.group)) {
    if (std::find(cls.begin(), cls.end(), s.c) != cls.end()) continue;
    for (Element e : cls)
      if (element_order(s.sl.group, e) == 3) return e;
  }
  throw InternalError("alternative_c: no second class of order-3 elements");
}

}  // namespace

CheckReport verify_sl23_char2(const VerifyOptions& opt, std::optional<Element> c) {
  Stopwatch clock;
  const Sl23Notation s = sl23_notation(c);
  const GroupRingArith zg(2, s.sl.group);
  const CoeffVec a = sl23_unit_a(zg, s), b = sl23_unit_b(zg, s);
  json out = json::array();
  const auto ord_a = zg.element_order(a), ord_b = zg.element_order(b);
  const bool a8 = zg.pow(a, 8) == zg.one(), b8 = zg.pow(b, 8) == zg.one();
  out.push_back({{"case", "A^8 = 1"}, {"c", s.c}, {"order", ord_a ? json(*ord_a) : json(nullptr)}, {"ok", a8}});
  out.push_back({{"case", "B^8 = 1"}, {"c", s.c}, {"order", ord_b ? json(*ord_b) : json(nullptr)}, {"ok", b8}});
  const auto cases = run_char2(s, opt.jobs);
  for (std::size_t idx = 0; idx < cases.size(); ++idx) {
    const Element x = s.q8[idx / 8], y = s.q8[idx % 8];
    out.push_back({{"case", idx},
                   {"x", q8_name(s, x)},
                   {"y", q8_name(s, y)},
                   {"ideal_rank", cases[idx].rank},
                   {"injective", cases[idx].embedding.injective},
                   {"kernel_witness", pair_json(cases[idx].embedding.witness)},
                   {"ok", !cases[idx].embedding.injective}});
  }
  return finish("sl23_char2", std::move(out), clock);
}

CheckReport verify_sl23_char4(const VerifyOptions& opt, std::optional<Element> c) {
  Stopwatch clock;
  const Sl23Notation s = sl23_notation(c);
  json out = json::array();
  const Char4Lemmas lem = char4_lemmas(s);
  out.push_back({{"case", "(i+j+k)^2 = 1 modulo (1+i^2, 2r-2)"}, {"c", s.c}, {"ok", lem.square_mod}});
  out.push_back({{"case", "x^3 = 1 + (c^2-c)(i+j+k-1) modulo (1+i^2, 2r-2)"}, {"c", s.c}, {"ok", lem.cube_mod}});
  out.push_back(info({{"case", "identities evaluated literally in Z4[G]"}, {"lemmas", lemma_json(lem)}}));

  const auto vs = char4_v_values(s);
  auto emit = [&](Char4Variant variant, bool primary) {
    const auto cases = run_char4(s, variant, opt.jobs);
    for (std::size_t idx = 0; idx < cases.size(); ++idx) {
      json w = {{"case", idx},
                {"generators", variant_name(variant)},
                {"eps", idx / vs.size() == 0 ? 1 : -1},
                {"v", vs[idx % vs.size()]},
                {"ideal_rank", cases[idx].rank},
                {"injective", cases[idx].embedding.injective},
                {"kernel_witness", pair_json(cases[idx].embedding.witness)},
                {"two_r_minus_two_in_ideal", cases[idx].two_r_ok},
                {"ok", char4_case_ok(cases[idx])}};
      out.push_back(primary ? w : info(w));
    }
  };
  emit(Char4Variant::Derived, true);
  emit(Char4Variant::Printed, false);
  emit(Char4Variant::PlusV, false);
  return finish("sl23_char4", std::move(out), clock);
}

CheckReport verify_choice_independence(const VerifyOptions& opt) {
  Stopwatch clock;
  const Sl23Notation base = sl23_notation();
  const Sl23Notation alt = sl23_notation(alternative_c(base));
  json out = json::array();

  const auto c2a = run_char2(base, opt.jobs), c2b = run_char2(alt, opt.jobs);
  for (std::size_t idx = 0; idx < c2a.size(); ++idx)
    out.push_back({{"case", "char2/" + std::to_string(idx)},
                   {"c", base.c},
                   {"alternative_c", alt.c},
                   {"injective", c2a[idx].embedding.injective},
                   {"alternative_injective", c2b[idx].embedding.injective},
                   {"ok", c2a[idx].embedding.injective == c2b[idx].embedding.injective}});

  const auto c4a = run_char4(base, Char4Variant::Derived, opt.jobs);
  const auto c4b = run_char4(alt, Char4Variant::Derived, opt.jobs);
  for (std::size_t idx = 0; idx < c4a.size(); ++idx)
    out.push_back({{"case", "char4/" + std::to_string(idx)},
                   {"c", base.c},
                   {"alternative_c", alt.c},
                   {"outcome", char4_case_ok(c4a[idx])},
                   {"alternative_outcome", char4_case_ok(c4b[idx])},
                   {"ok", char4_case_ok(c4a[idx]) == char4_case_ok(c4b[idx])}});

  out.push_back(info({{"case", "char4 identities with the alternative c"},
                      {"alternative_c", alt.c},
                      {"lemmas", lemma_json(char4_lemmas(alt))}}));
  // Every order-3 choice of c, with i and j fixed.
  for (Element c : base.order_three) {
    const auto cases = run_char2(sl23_notation(c), opt.jobs);
    json injective = json::array();
    for (std::size_t idx = 0; idx < cases.size(); ++idx)
      if (cases[idx].embedding.injective) injective.push_back(idx);
    out.push_back(info({{"case", "char2 sweep"}, {"c", c}, {"injective_cases", injective}}));
  }
  return finish("choice_independence", std::move(out), clock);
}

// ------------------------------------------------------------------- SL facts

CheckReport verify_sl_facts(const VerifyOptions& opt) {
  Stopwatch clock;
  json out = json::array();
  const std::vector<std::uint64_t> qs = {2, 3, 4, 5, 7, 8, 9};
  std::vector<json> centers(qs.size());
  parallel_for(qs.size(), opt.jobs, [&](std::size_t k) {
    const std::uint64_t q = qs[k];
    const std::size_t z = center(sl2(q, opt.bounds).group).size();
    const std::uint64_t want = std::gcd<std::uint64_t>(2, q - 1);
    centers[k] = {{"case", "center SL2(" + std::to_string(q) + ")"}, {"order", z}, {"expected", want}, {"ok", z == want}};
  });
  for (auto& w : centers) out.push_back(std::move(w));

  // Proper nontrivial normal subgroups against the expected isomorphism types.
  auto normal_case = [&](const std::string& name, const FiniteGroup& g, const std::vector<FiniteGroup>& expected) {
    std::vector<Subgroup> proper;
    for (auto& n : normal_subgroups(g))
      if (n.size() > 1 && n.size() < g.order()) proper.push_back(n);
    std::vector<std::uint64_t> sizes;
    for (auto& n : proper) sizes.push_back(n.size());
    bool ok = proper.size() == expected.size();
    for (std::size_t i = 0; ok && i < proper.size(); ++i)
      ok = is_isomorphic(subgroup_as_group(g, proper[i], "N"), expected[i]).isomorphic;
    std::vector<std::string> labels;
    for (auto& e : expected) labels.push_back(e.label());
    out.push_back({{"case", "normal subgroups " + name},
                   {"sizes", multiset_string(sizes)},
                   {"expected", labels},
                   {"ok", ok}});
  };
  const FiniteGroup s3 = sl2(3, opt.bounds).group;
  normal_case("SL2(2)", sl2(2, opt.bounds).group, {cyclic(3)});
  normal_case("SL2(3)", s3, {cyclic(2), quaternion8()});
  normal_case("GL2(3)", gl2(3, opt.bounds).group, {cyclic(2), quaternion8(), s3.relabeled("SL2(3)")});
  normal_case("SL2(5)", sl2(5, opt.bounds).group, {cyclic(2)});
  {
    const FiniteGroup g = sl2(2, opt.bounds).group;
    const bool ok = g.order() == gl2(2, opt.bounds).group.order() && is_isomorphic(g, symmetric(3)).isomorphic;
    out.push_back({{"case", "SL2(2) = GL2(2) = S3"}, {"ok", ok}});
  }
  {
    // A self-centralizing cyclic subgroup of order 8 in SL_2(F_7).
    const FiniteGroup g = sl2(7, opt.bounds).group;
    json found = nullptr;
    for (std::size_t x = 0; x < g.order() && found.is_null(); ++x) {
      if (element_order(g, Element(x)) != 8) continue;
      const Element gen[] = {Element(x)};
      if (centralizer(g, gen) == subgroup_generated(g, gen)) found = x;
    }
    out.push_back({{"case", "SL2(7) self-centralizing C8"}, {"generator", found}, {"ok", !found.is_null()}});
  }
  for (auto [c, want] : {std::pair{2, 1}, {3, 2}, {4, 2}, {6, 2}}) {
    const std::size_t got = units_mod(c).size();
    out.push_back({{"case", "|Z" + std::to_string(c) + "^x|"}, {"order", got}, {"expected", want},
                   {"ok", got == std::size_t(want)}});
  }
  return finish("sl_facts", std::move(out), clock);
}

// ------------------------------------------------------------------------- UC

namespace {

std::uint64_t expected_uc_order(std::uint64_t q) { return q % 4 == 1 ? q - 1 : q + 1; }

// For q = 1 mod 4: s -> ((s + 1/s)/2, (s - 1/s)/(2i)) with i^2 = -1 should be a
// bijection from F_q^x onto UC(F_q).
bool uc_formula_crosscheck(const LinearGroup& sl, const Subgroup& u) {
  const FqField& f = sl.field;
  std::optional<FqElem> i;
  for (std::uint32_t a = 1; a < f.order() && !i; ++a)
    if (f.mul({a}, {a}) == f.neg(f.one())) i = FqElem{a};
  if (!i) return false;
  const FqElem half = f.inv(f.from_int(2)), inv_2i = f.inv(f.mul(f.from_int(2), *i));
  std::set<Element> image;
  for (std::uint32_t a = 1; a < f.order(); ++a) {
    const FqElem s{a}, si = f.inv(s);
    const FqElem x = f.mul(f.add(s, si), half), y = f.mul(f.sub(s, si), inv_2i);
    const Element e = sl.index_of({x, y, f.neg(y), x});
    if (e == LinearGroup::npos || !u.contains(e)) return false;
    image.insert(e);
  }
  return image.size() == u.size();
}

}  // namespace

CheckReport verify_uc(const VerifyOptions& opt, std::vector<std::uint64_t> qs) {
  Stopwatch clock;
  for (auto q : qs)
    if (q % 2 == 0) throw BadParameter("verify_uc: q must be odd, got " + std::to_string(q));
  std::vector<json> out(qs.size());
  parallel_for(qs.size(), opt.jobs, [&](std::size_t k) {
    const std::uint64_t q = qs[k];
    const LinearGroup sl = sl2(q, opt.bounds);
    const Subgroup u = uc(sl);
    const bool cyclic_ok = is_cyclic(subgroup_as_group(sl.group, u, "UC"));
    const bool self_centralizing = centralizer(sl.group, u.members) == u;
    json w = {{"case", "UC(" + std::to_string(q) + ")"},
              {"order", u.size()},
              {"expected", expected_uc_order(q)},
              {"cyclic", cyclic_ok},
              {"self_centralizing", self_centralizing}};
    bool ok = cyclic_ok && self_centralizing && u.size() == expected_uc_order(q);
    if (q % 4 == 1) {
      const bool formula = uc_formula_crosscheck(sl, u);
      w["inverse_formula_crosscheck"] = formula;
      ok = ok && formula;
    }
    w["ok"] = ok;
    out[k] = std::move(w);
  });
  return finish("uc", json(out), clock);
}

CheckReport verify_char0_obstruction(const VerifyOptions& opt, std::vector<std::uint64_t> qs,
                                     std::uint64_t construct_max) {
  Stopwatch clock;
  std::vector<json> out(qs.size());
  parallel_for(qs.size(), opt.jobs, [&](std::size_t k) {
    const std::uint64_t q = qs[k];
    json w = {{"case", "q = " + std::to_string(q)}, {"q_mod_8", q % 8}};
    if (q % 2 == 0) {
      w.update({{"ok", false}, {"error", "q must be odd"}});
      out[k] = std::move(w);
      return;
    }
    std::uint64_t order = expected_uc_order(q);
    bool constructed = false;
    if (q <= construct_max) {
      order = uc(sl2(q, opt.bounds)).size();
      constructed = true;
    }
    bool ok = false;
    if (q % 8 == 1) ok = (q - 1) % 8 == 0 && order == q - 1;
    else if (q % 8 == 7) ok = (q + 1) % 8 == 0 && order == q + 1;
    else ok = order % 8 != 0;
    w.update({{"uc_order", order}, {"constructed", constructed}, {"eight_divides", order % 8 == 0}, {"ok", ok}});
    out[k] = std::move(w);
  });
  return finish("char0_obstruction", json(out), clock);
}

// ----------------------------------------------------------------- holomorphs

namespace {

// Elements (a, b) of Hol(n) lying in the image of Hol(2^e) x {1} under the CRT
// splitting n = 2^e m: a = 0 and b = 1 modulo m.
bool in_two_factor(std::uint64_t n, std::uint64_t m, Element x) {
  const AffinePair p = holomorph_decode(n, x);
  return p.a % m == 0 && p.b % m == 1 % m;
}

}  // namespace

CheckReport verify_hol_facts(const VerifyOptions& opt, std::uint64_t n_max, std::uint64_t n_center_max) {
  Stopwatch clock;
  json out = json::array();

  const std::uint64_t n_top = std::max(n_max, n_center_max);
  std::vector<json> order_cases(n_top);
  parallel_for(n_top, opt.jobs, [&](std::size_t k) {
    const std::uint64_t n = k + 1;
    Bounds b = opt.bounds;
    if (n > n_max) b.table_threshold = 0;  // order-level queries only
    const FiniteGroup g = holomorph(n, b);
    const std::size_t z = center(g).size();
    const std::size_t want_z = n % 2 == 0 ? 2 : 1;
    order_cases[k] = {{"case", "Hol(" + std::to_string(n) + ") order and center"},
                      {"order", g.order()},
                      {"center", z},
                      {"ok", g.order() == n * euler_phi(n) && z == want_z}};
  });
  for (auto& w : order_cases) out.push_back(std::move(w));

  std::vector<json> sub_cases(n_max);
  parallel_for(n_max, opt.jobs, [&](std::size_t k) {
    const std::uint64_t n = k + 1;
    const FiniteGroup g = holomorph(n, opt.bounds);
    const Subgroup zn = holomorph_translations(n);
    const bool self_centralizing = centralizer(g, zn.members) == zn;
    json bad = nullptr;
    for (const auto& h : normal_subgroups(g)) {
      if (h.size() == 1) continue;
      const bool meets = std::any_of(h.members.begin(), h.members.end(),
                                     [&](Element e) { return e != g.identity() && zn.contains(e); });
      if (!meets) {
        bad = h.members;
        break;
      }
    }
    sub_cases[k] = {{"case", "Hol(" + std::to_string(n) + ") translations"},
                    {"self_centralizing", self_centralizing},
                    {"normal_subgroup_missing_translations", bad},
                    {"ok", self_centralizing && bad.is_null()}};
  });
  for (auto& w : sub_cases) out.push_back(std::move(w));

  const std::vector<std::pair<std::uint64_t, std::uint64_t>> splits = {{3, 4}, {3, 5}, {4, 5}, {3, 7}};
  std::vector<json> split_cases(splits.size());
  parallel_for(splits.size(), opt.jobs, [&](std::size_t k) {
    const auto [a, b] = splits[k];
    const IsoResult iso =
        is_isomorphic(holomorph(a * b, opt.bounds), direct_product(holomorph(a, opt.bounds), holomorph(b, opt.bounds)));
    split_cases[k] = {{"case", "Hol(" + std::to_string(a * b) + ") = Hol(" + std::to_string(a) + ") x Hol(" +
                                   std::to_string(b) + ")"},
                      {"ok", iso.isomorphic}};
    if (!iso.isomorphic) split_cases[k]["obstruction"] = iso.obstruction;
  });
  for (auto& w : split_cases) out.push_back(std::move(w));

  const std::vector<std::uint64_t> two_factor_ns = {6, 10, 14, 12, 20, 28};
  std::vector<json> two_cases(two_factor_ns.size());
  parallel_for(two_factor_ns.size(), opt.jobs, [&](std::size_t k) {
    const std::uint64_t n = two_factor_ns[k];
    const std::uint64_t m = n % 4 == 0 ? n / 4 : n / 2;
    const FiniteGroup g = holomorph(n, opt.bounds);
    std::size_t count = 0;
    json bad = nullptr;
    for (const auto& h : normal_subgroups(g)) {
      if (!is_p_group_order(h.size(), 2)) continue;
      ++count;
      for (Element e : h.members)
        if (!in_two_factor(n, m, e)) {
          bad = e;
          break;
        }
      if (!bad.is_null()) break;
    }
    two_cases[k] = {{"case", "Hol(" + std::to_string(n) + ") normal 2-subgroups in Hol(" +
                                 std::to_string(n / m) + ") factor"},
                    {"normal_2_subgroups", count},
                    {"outside_element", bad},
                    {"ok", bad.is_null()}};
  });
  for (auto& w : two_cases) out.push_back(std::move(w));
  return finish("hol_facts", std::move(out), clock);
}

// ------------------------------------------------------------ neat theorem

CheckReport verify_theorem_neat(const VerifyOptions& opt, std::uint64_t n_max, std::uint64_t n_iso_max) {
  Stopwatch clock;
  json out = json::array();
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const std::uint64_t order = n * euler_phi(n);
    const bool divides12 = 12 % n == 0, divides48 = 48 % order == 0;
    out.push_back({{"case", "n = " + std::to_string(n) + " order"},
                   {"order", order},
                   {"n_divides_12", divides12},
                   {"order_divides_48", divides48},
                   {"ok", divides12 == divides48}});
  }
  std::vector<json> iso_cases(n_iso_max);
  parallel_for(n_iso_max, opt.jobs, [&](std::size_t k) {
    const std::uint64_t n = k + 1;
    const auto dec = is_dihedral_product(holomorph(n, opt.bounds));
    iso_cases[k] = {{"case", "n = " + std::to_string(n) + " dihedral product"},
                    {"decomposition", dec ? json(*dec) : json(nullptr)},
                    {"ok", dec.has_value() == (12 % n == 0)}};
  });
  for (auto& w : iso_cases) out.push_back(std::move(w));
  out.push_back({{"case", "8 phi(8) = 32"}, {"ok", 8 * euler_phi(8) == 32 && 48 % 32 != 0}});
  out.push_back({{"case", "24 phi(24) = 192"}, {"ok", 24 * euler_phi(24) == 192 && 48 % 192 != 0}});
  return finish("theorem_neat", std::move(out), clock);
}

// -------------------------------------------------------------- small remarks

CheckReport verify_hurwitz(const VerifyOptions& opt) {
  Stopwatch clock;
  json out = json::array();
  const FiniteGroup h = hurwitz_unit_group();
  const FiniteGroup s = sl2(3, opt.bounds).group;
  out.push_back({{"case", "24 units"}, {"order", h.order()}, {"ok", h.order() == 24}});
  const IsoResult iso = is_isomorphic(h, s);
  const bool verified = iso.isomorphic && verify_isomorphism(h, s, iso.witness);
  out.push_back({{"case", "isomorphic to SL2(3)"},
                 {"witness", iso.isomorphic ? json(iso.witness) : json(nullptr)},
                 {"ok", verified}});
  const auto spectrum = order_spectrum(h);
  const std::uint64_t involutions = spectrum.count(2) ? spectrum.at(2) : 0;
  out.push_back({{"case", "unique involution"}, {"involutions", involutions}, {"ok", involutions == 1}});
  return finish("hurwitz", std::move(out), clock);
}

CheckReport verify_agl1_remark(const VerifyOptions& opt) {
  Stopwatch clock;
  json out = json::array();
  const FiniteGroup g = agl1(4, opt.bounds);
  out.push_back({{"case", "order 12"}, {"order", g.order()}, {"ok", g.order() == 12}});
  // A subgroup of order 6 is generated by two of its elements.
  bool index_two = false;
  for (Element a = 0; a < g.order() && !index_two; ++a)
    for (Element b = a; b < g.order() && !index_two; ++b) {
      const Element gens[] = {a, b};
      index_two = subgroup_generated(g, gens).size() == 6;
    }
  out.push_back({{"case", "no subgroup of index 2"}, {"ok", !index_two}});
  const std::size_t ab = abelianization_order(g);
  out.push_back({{"case", "abelianization order 3"}, {"order", ab}, {"ok", ab == 3}});
  const std::pair<const char*, FiniteGroup> others[] = {
      {"D12", dihedral(12)}, {"C12", cyclic(12)}, {"C2 x S3", direct_product(cyclic(2), symmetric(3))}};
  for (const auto& [name, h] : others) {
    const IsoResult iso = is_isomorphic(g, h);
    out.push_back({{"case", std::string("not isomorphic to ") + name},
                   {"obstruction", iso.obstruction},
                   {"ok", !iso.isomorphic}});
  }
  out.push_back({{"case", "isomorphic to A4"}, {"ok", is_isomorphic(g, alternating(4)).isomorphic}});
  return finish("agl1_remark", std::move(out), clock);
}

// ------------------------------------------------------------------- registry

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "units_table", "sl23_char2", "sl23_char4", "choice_independence", "sl_facts",   "uc",
      "char0_obstruction", "hol_facts", "theorem_neat", "hurwitz", "agl1_remark"};
  return names;
}

CheckReport run_check(const std::string& name, const VerifyOptions& opt) {
  if (name == "units_table") return verify_units_table(opt);
  if (name == "sl23_char2") return verify_sl23_char2(opt);
  if (name == "sl23_char4") return verify_sl23_char4(opt);
  if (name == "choice_independence") return verify_choice_independence(opt);
  if (name == "sl_facts") return verify_sl_facts(opt);
  if (name == "uc") return verify_uc(opt);
  if (name == "char0_obstruction") return verify_char0_obstruction(opt);
  if (name == "hol_facts") return verify_hol_facts(opt);
  if (name == "theorem_neat") return verify_theorem_neat(opt);
  if (name == "hurwitz") return verify_hurwitz(opt);
  if (name == "agl1_remark") return verify_agl1_remark(opt);
  throw BadParameter("unknown check '" + name + "'");
}

SuiteReport run_suite(const std::vector<std::string>& names, const VerifyOptions& opt) {
  SuiteReport s;
  for (const auto& n : names) s.checks.push_back(run_check(n, opt));
  return s;
}

}  // namespace finalg
