#include "finalg/finite_group.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <unordered_map>

#include "finalg/error.hpp"

namespace finalg {

FiniteGroup FiniteGroup::build(std::size_t order, Element identity, MulFn mul, InvFn inv, std::string label,
                               const Bounds& bounds) {
  if (order == 0) throw BadParameter("group: order must be positive");
  if (order > bounds.max_elements)
    throw SizeExceeded("group " + label + ": order " + std::to_string(order) + " exceeds the size bound");
  auto impl = std::make_shared<Impl>();
  impl->order = order;
  impl->identity = identity;
  impl->label = std::move(label);
  if (order <= bounds.table_threshold) {
    impl->table.resize(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        impl->table[a * order + b] = mul(static_cast<Element>(a), static_cast<Element>(b));
    impl->inverse.resize(order);
    for (std::size_t a = 0; a < order; ++a) impl->inverse[a] = inv(static_cast<Element>(a));
  } else {
    impl->mul = std::move(mul);
    impl->inv = std::move(inv);
  }
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::from_table(std::vector<Element> table, std::string label) {
  std::size_t n = 0;
  while (n * n < table.size()) ++n;
  if (n == 0 || n * n != table.size()) throw BadParameter("group: table is not square");
  for (Element e : table)
    if (e >= n) throw BadParameter("group: table entry out of range");
  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e * n + a] == a && table[a * n + e] == a;
    if (ok) identity = static_cast<Element>(e);
  }
  if (!identity) throw BadParameter("group: table has no identity");
  auto impl = std::make_shared<Impl>();
  impl->order = n;
  impl->identity = *identity;
  impl->label = std::move(label);
  impl->inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b)
      if (table[a * n + b] == *identity && table[b * n + a] == *identity) {
        impl->inverse[a] = static_cast<Element>(b);
        found = true;
      }
    if (!found) throw BadParameter("group: element without inverse");
  }
  impl->table = std::move(table);
  return FiniteGroup(std::move(impl));
}

Element FiniteGroup::pow(Element a, std::uint64_t e) const {
  Element result = identity(), base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::span<const Element> FiniteGroup::table() const {
  require_table("table");
  return impl_->table;
}

void FiniteGroup::require_table(const char* what) const {
  if (!has_table())
    throw SizeExceeded(std::string(what) + ": group " + label() + " of order " + std::to_string(order()) +
                       " has no Cayley table (above the table threshold)");
}

FiniteGroup FiniteGroup::relabeled(std::string label) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->label = std::move(label);
  return FiniteGroup(std::move(impl));
}

bool Subgroup::contains(Element g) const { return std::binary_search(members.begin(), members.end(), g); }

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, std::string label) {
  const std::size_t n = h.size();
  std::unordered_map<Element, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(h.members[i], static_cast<Element>(i));
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(g.mul(h.members[a], h.members[b]));
      if (it == index.end()) throw BadParameter("subgroup_as_group: members are not closed under multiplication");
      table[a * n + b] = it->second;
    }
  return FiniteGroup::from_table(std::move(table), std::move(label));
}

bool satisfies_group_axioms(const FiniteGroup& g, std::size_t exhaustive_limit, std::size_t samples,
                            std::uint64_t seed) {
  const std::size_t n = g.order();
  const Element e = g.identity();
  for (std::size_t a = 0; a < n; ++a) {
    auto x = static_cast<Element>(a);
    if (g.mul(e, x) != x || g.mul(x, e) != x) return false;
    if (g.mul(x, g.inv(x)) != e || g.mul(g.inv(x), x) != e) return false;
  }
  auto assoc = [&](Element a, Element b, Element c) { return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)); };
  if (n <= exhaustive_limit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(static_cast<Element>(a), static_cast<Element>(b), static_cast<Element>(c))) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < samples; ++i)
    if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

}  // namespace finalg
