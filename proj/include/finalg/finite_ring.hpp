#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "finalg/bounds.hpp"
#include "finalg/ring_expr.hpp"

namespace finalg {

using RingElem = std::uint64_t;

/// A finite ring with identity on the indices 0 .. size-1.
///
/// Operations are evaluators; rings of at most kTableLimit elements cache full
/// addition and multiplication tables. Copies share the immutable storage.
class FiniteRing {
 public:
  using BinFn = std::function<RingElem(RingElem, RingElem)>;
  using UnFn = std::function<RingElem(RingElem)>;

  static constexpr std::uint64_t kTableLimit = 1024;

  static FiniteRing make(std::uint64_t size, RingElem zero, RingElem one, BinFn add, BinFn mul, UnFn neg,
                         std::string label);

  std::uint64_t size() const noexcept { return impl_->size; }
  RingElem zero() const noexcept { return impl_->zero; }
  RingElem one() const noexcept { return impl_->one; }
  const std::string& label() const noexcept { return impl_->label; }

  RingElem add(RingElem a, RingElem b) const {
    return impl_->add_table.empty() ? impl_->add(a, b) : impl_->add_table[a * impl_->size + b];
  }
  RingElem mul(RingElem a, RingElem b) const {
    return impl_->mul_table.empty() ? impl_->mul(a, b) : impl_->mul_table[a * impl_->size + b];
  }
  RingElem neg(RingElem a) const { return impl_->neg_table.empty() ? impl_->neg(a) : impl_->neg_table[a]; }
  RingElem sub(RingElem a, RingElem b) const { return add(a, neg(b)); }
  RingElem pow(RingElem a, std::uint64_t e) const;

  /// Additive order of one.
  std::uint64_t characteristic() const noexcept { return impl_->characteristic; }

 private:
  struct Impl {
    std::uint64_t size = 0;
    RingElem zero = 0, one = 0;
    std::string label;
    BinFn add, mul;
    UnFn neg;
    std::vector<std::uint32_t> add_table, mul_table, neg_table;
    std::uint64_t characteristic = 0;
  };
  explicit FiniteRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Throws SizeExceeded when the ring has more than bounds.max_elements
/// elements, BadParameter on invalid atoms.
FiniteRing build_ring(const RingExpr& e, const Bounds& bounds = {});

/// Number of elements the expression describes, saturating at UINT64_MAX.
std::uint64_t ring_size(const RingExpr& e);

std::uint64_t characteristic(const FiniteRing& r);

/// Additive group laws on all pairs. Associativity of both operations and both
/// distributive laws on every triple when size <= exhaustive_limit, otherwise
/// on `samples` random triples.
bool satisfies_ring_axioms(const FiniteRing& r, std::uint64_t exhaustive_limit = 512, std::size_t samples = 100000,
                           std::uint64_t seed = 1);

}  // namespace finalg
