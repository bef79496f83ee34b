#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "finalg/bounds.hpp"

namespace finalg {

using Element = std::uint32_t;

/// A finite group on the elements 0 .. order-1.
///
/// Small groups carry a full Cayley table; large structured groups (holomorphs,
/// big matrix groups) keep their multiplication as an evaluator instead. Copies
/// share the immutable storage.
class FiniteGroup {
 public:
  using MulFn = std::function<Element(Element, Element)>;
  using InvFn = std::function<Element(Element)>;

  /// Tabulates mul when order <= bounds.table_threshold; otherwise keeps the
  /// evaluators. Throws SizeExceeded when order > bounds.max_elements.
  static FiniteGroup build(std::size_t order, Element identity, MulFn mul, InvFn inv, std::string label,
                           const Bounds& bounds = {});
  /// From a row-major Cayley table. Validates closure, identity and inverses.
  static FiniteGroup from_table(std::vector<Element> table, std::string label);

  std::size_t order() const noexcept { return impl_->order; }
  Element identity() const noexcept { return impl_->identity; }
  const std::string& label() const noexcept { return impl_->label; }
  bool has_table() const noexcept { return !impl_->table.empty(); }

  Element mul(Element a, Element b) const {
    return impl_->table.empty() ? impl_->mul(a, b) : impl_->table[std::size_t(a) * impl_->order + b];
  }
  Element inv(Element a) const { return impl_->inverse.empty() ? impl_->inv(a) : impl_->inverse[a]; }
  Element pow(Element a, std::uint64_t e) const;
  /// g^-1 a g
  Element conj(Element a, Element g) const { return mul(mul(inv(g), a), g); }

  /// Throws SizeExceeded if no table is held.
  std::span<const Element> table() const;
  void require_table(const char* what) const;

  /// Same group under a new label.
  FiniteGroup relabeled(std::string label) const;

 private:
  struct Impl {
    std::size_t order = 0;
    Element identity = 0;
    std::string label;
    std::vector<Element> table;
    std::vector<Element> inverse;
    MulFn mul;
    InvFn inv;
  };
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// A subgroup given by its sorted member list.
struct Subgroup {
  std::vector<Element> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Element g) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// The subgroup as a group in its own right (elements renumbered 0..|H|-1 in member order).
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, std::string label);

/// Checks identity and inverse laws on every element and associativity on every
/// triple when order <= exhaustive_limit, else on `samples` random triples.
bool satisfies_group_axioms(const FiniteGroup& g, std::size_t exhaustive_limit = 200, std::size_t samples = 100000,
                            std::uint64_t seed = 1);

}  // namespace finalg
