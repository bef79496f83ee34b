#include "finalg/isomorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "finalg/error.hpp"
#include "finalg/group_constructors.hpp"
#include "finalg/group_structure.hpp"

namespace finalg {
namespace {

struct Signature {
  std::uint64_t order;
  std::uint64_t class_size;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const FiniteGroup& g, const std::vector<std::vector<Element>>& classes) {
  std::vector<Signature> sig(g.order());
  for (const auto& cls : classes) {
    const std::uint64_t ord = element_order(g, cls.front());
    for (Element x : cls) sig[x] = {ord, cls.size()};
  }
  return sig;
}

std::multiset<std::size_t> class_sizes(const std::vector<std::vector<Element>>& classes) {
  std::multiset<std::size_t> out;
  for (const auto& c : classes) out.insert(c.size());
  return out;
}

// Greedy generating set preferring elements whose signature is rare in the
// target, so the backtracking has few candidate images per generator.
std::vector<Element> search_generators(const FiniteGroup& g, const std::vector<Signature>& sig,
                                       const std::map<Signature, std::size_t>& target_counts) {
  std::vector<Element> order(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Element>(i);
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    const std::size_t ca = target_counts.at(sig[a]), cb = target_counts.at(sig[b]);
    if (ca != cb) return ca < cb;
    return sig[a].order > sig[b].order;
  });
  std::vector<Element> gens;
  Subgroup current{{g.identity()}};
  for (Element x : order) {
    if (current.size() == g.order()) break;
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = subgroup_generated(g, gens);
  }
  return gens;
}

class Backtracker {
 public:
  Backtracker(const FiniteGroup& g, const FiniteGroup& h, std::vector<Element> gens,
              const std::vector<Signature>& sig_g, const std::vector<Signature>& sig_h)
      : g_(g), h_(h), gens_(std::move(gens)), sig_g_(sig_g), sig_h_(sig_h) {}

  std::optional<std::vector<Element>> run() {
    images_.clear();
    return search(0);
  }

 private:
  std::optional<std::vector<Element>> search(std::size_t depth) {
    if (depth == gens_.size()) {
      auto map = extend(depth);
      if (map && std::find(map->begin(), map->end(), kUnset) == map->end()) return map;
      return std::nullopt;
    }
    for (std::size_t y = 0; y < h_.order(); ++y) {
      if (sig_h_[y] != sig_g_[gens_[depth]]) continue;
      images_.push_back(static_cast<Element>(y));
      if (extend(depth + 1)) {
        if (auto found = search(depth + 1)) return found;
      }
      images_.pop_back();
    }
    return std::nullopt;
  }

  // Extends gens[0..depth) -> images over the generated subgroup; nullopt when
  // the assignment is not a well-defined injective homomorphism there.
  std::optional<std::vector<Element>> extend(std::size_t depth) const {
    std::vector<Element> map(g_.order(), kUnset);
    std::vector<char> used(h_.order(), 0);
    map[g_.identity()] = h_.identity();
    used[h_.identity()] = 1;
    std::deque<Element> queue{g_.identity()};
    while (!queue.empty()) {
      Element x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < depth; ++i) {
        const Element y = g_.mul(x, gens_[i]);
        const Element fy = h_.mul(map[x], images_[i]);
        if (map[y] == kUnset) {
          if (used[fy]) return std::nullopt;
          map[y] = fy;
          used[fy] = 1;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return std::nullopt;
        }
      }
    }
    return map;
  }

  static constexpr Element kUnset = ~Element(0);

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::vector<Element> gens_;
  const std::vector<Signature>& sig_g_;
  const std::vector<Signature>& sig_h_;
  std::vector<Element> images_;
};

IsoResult not_iso(std::string why) { return {false, {}, std::move(why)}; }

}  // namespace

IsoResult is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  g.require_table("is_isomorphic");
  h.require_table("is_isomorphic");
  if (g.order() != h.order()) return not_iso("order");
  if (order_spectrum(g) != order_spectrum(h)) return not_iso("order spectrum");
  if (center(g).size() != center(h).size()) return not_iso("center size");
  if (abelianization_spectrum(g) != abelianization_spectrum(h)) return not_iso("abelianization");
  const auto classes_g = conjugacy_classes(g);
  const auto classes_h = conjugacy_classes(h);
  if (class_sizes(classes_g) != class_sizes(classes_h)) return not_iso("conjugacy class sizes");

  const auto sig_g = signatures(g, classes_g);
  const auto sig_h = signatures(h, classes_h);
  std::map<Signature, std::size_t> count_g, count_h;
  for (const auto& s : sig_g) ++count_g[s];
  for (const auto& s : sig_h) ++count_h[s];
  if (count_g != count_h) return not_iso("element order and class size distribution");

  Backtracker bt(g, h, search_generators(g, sig_g, count_h), sig_g, sig_h);
  auto map = bt.run();
  if (!map) return not_iso("no isomorphism (exhaustive search)");
  if (!verify_isomorphism(g, h, *map)) throw InternalError("is_isomorphic: witness failed verification");
  return {true, std::move(*map), {}};
}

bool verify_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Element>& map) {
  if (g.order() != h.order() || map.size() != g.order()) return false;
  std::vector<char> hit(h.order(), 0);
  for (Element y : map) {
    if (y >= h.order() || hit[y]) return false;
    hit[y] = 1;
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (map[g.mul(static_cast<Element>(a), static_cast<Element>(b))] != h.mul(map[a], map[b])) return false;
  return true;
}

namespace {

// Non-increasing lists of even integers >= 2 with the given product and length.
void even_factorizations(std::uint64_t remaining, std::uint64_t max_factor, std::size_t slots,
                         std::vector<std::uint64_t>& prefix, std::vector<std::vector<std::uint64_t>>& out) {
  if (slots == 0) {
    if (remaining == 1) out.push_back(prefix);
    return;
  }
  for (std::uint64_t f = std::min(max_factor, remaining); f >= 2; --f) {
    if (f % 2 != 0 || remaining % f != 0) continue;
    prefix.push_back(f);
    even_factorizations(remaining / f, f, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::optional<std::vector<std::uint64_t>> is_dihedral_product(const FiniteGroup& g) {
  const std::uint64_t n = g.order();
  if (n == 1) return std::vector<std::uint64_t>{};
  if (n % 2 != 0) return std::nullopt;
  std::size_t max_slots = 0;
  for (std::uint64_t m = n; m % 2 == 0; m /= 2) ++max_slots;
  for (std::size_t slots = 1; slots <= max_slots; ++slots) {
    std::vector<std::vector<std::uint64_t>> lists;
    std::vector<std::uint64_t> prefix;
    even_factorizations(n, n, slots, prefix, lists);
    for (const auto& list : lists) {
      FiniteGroup prod = dihedral(list.front());
      for (std::size_t i = 1; i < list.size(); ++i) prod = direct_product(prod, dihedral(list[i]));
      if (is_isomorphic(g, prod).isomorphic) return list;
    }
  }
  return std::nullopt;
}

}  // namespace finalg
