#include "finalg/group_structure.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "finalg/error.hpp"

namespace finalg {

std::uint64_t element_order(const FiniteGroup& g, Element x) {
  std::uint64_t k = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

std::map<std::uint64_t, std::uint64_t> order_spectrum(const FiniteGroup& g) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (std::size_t x = 0; x < g.order(); ++x) ++out[element_order(g, static_cast<Element>(x))];
  return out;
}

bool is_abelian(const FiniteGroup& g) {
  auto gens = generating_set(g);
  for (Element a : gens)
    for (Element b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_cyclic(const FiniteGroup& g) {
  for (std::size_t x = 0; x < g.order(); ++x)
    if (element_order(g, static_cast<Element>(x)) == g.order()) return true;
  return false;
}

namespace {

// Breadth-first closure of `seed` members under right multiplication by gens.
void close_under(const FiniteGroup& g, std::span<const Element> gens, std::vector<char>& in,
                 std::vector<Element>& members) {
  std::deque<Element> queue(members.begin(), members.end());
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      Element y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
        queue.push_back(y);
      }
    }
  }
}

}  // namespace

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = 1;
  close_under(g, generators, in, members);
  std::sort(members.begin(), members.end());
  return {members};
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (!h.contains(g.identity())) return false;
  for (Element a : h.members) {
    if (!h.contains(g.inv(a))) return false;
    for (Element b : h.members)
      if (!h.contains(g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  auto gens = generating_set(g);
  for (Element a : h.members)
    for (Element s : gens)
      if (!h.contains(g.conj(a, s))) return false;
  return true;
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::pair<std::uint64_t, Element>> cand;
  cand.reserve(n);
  for (std::size_t x = 0; x < n; ++x) cand.emplace_back(element_order(g, static_cast<Element>(x)), static_cast<Element>(x));
  std::stable_sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<Element> gens;
  std::vector<char> in(n, 0);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = 1;
  for (const auto& [ord, x] : cand) {
    if (members.size() == n) break;
    if (in[x]) continue;
    gens.push_back(x);
    // Re-close from every current member since the new generator acts on all of them.
    close_under(g, gens, in, members);
  }
  return gens;
}

Subgroup centralizer(const FiniteGroup& g, std::span<const Element> s) {
  Subgroup h;
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto e = static_cast<Element>(x);
    if (std::all_of(s.begin(), s.end(), [&](Element y) { return g.mul(e, y) == g.mul(y, e); })) h.members.push_back(e);
  }
  return h;
}

Subgroup center(const FiniteGroup& g) {
  auto gens = generating_set(g);
  return centralizer(g, gens);
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  g.require_table("conjugacy_classes");
  const auto gens = generating_set(g);
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<Element>> classes;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Element> cls{static_cast<Element>(x)};
    seen[x] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (Element s : gens) {
        Element y = g.conj(cls[i], s);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> s) {
  const auto ggens = generating_set(g);
  std::vector<Element> gens(s.begin(), s.end());
  Subgroup h = subgroup_generated(g, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < gens.size() && !grew; ++i)
      for (Element t : ggens) {
        Element c = g.conj(gens[i], t);
        if (!h.contains(c)) {
          gens.push_back(c);
          h = subgroup_generated(g, gens);
          grew = true;
          break;
        }
      }
  }
  return h;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  g.require_table("normal_subgroups");
  struct Normal {
    Subgroup h;
    std::vector<Element> gens;
  };
  std::vector<Normal> found;
  std::set<std::vector<Element>> keys;
  auto add = [&](Subgroup h, std::vector<Element> gens) {
    if (keys.insert(h.members).second) found.push_back({std::move(h), std::move(gens)});
  };
  add(Subgroup{{g.identity()}}, {});
  for (const auto& cls : conjugacy_classes(g)) {
    // the subgroup generated by a full class is already normal
    add(subgroup_generated(g, cls), cls);
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Element> gens = found[i].gens;
      gens.insert(gens.end(), found[j].gens.begin(), found[j].gens.end());
      add(subgroup_generated(g, gens), gens);
    }
  std::vector<Subgroup> out;
  for (auto& n : found) out.push_back(std::move(n.h));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.members < b.members;
  });
  return out;
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  auto gens = generating_set(g);
  std::vector<Element> comms;
  for (Element a : gens)
    for (Element b : gens) {
      Element c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (c != g.identity()) comms.push_back(c);
    }
  if (comms.empty()) return Subgroup{{g.identity()}};
  return normal_closure(g, comms);
}

std::map<std::uint64_t, std::uint64_t> abelianization_spectrum(const FiniteGroup& g) {
  const Subgroup d = derived_subgroup(g);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto e = static_cast<Element>(x);
    std::uint64_t k = 1;
    for (Element y = e; !d.contains(y); y = g.mul(y, e)) ++k;
    ++counts[k];
  }
  for (auto& [k, c] : counts) c /= d.size();
  return counts;
}

std::size_t abelianization_order(const FiniteGroup& g) { return g.order() / derived_subgroup(g).size(); }

bool is_p_group_order(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace finalg
