#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "finalg/coeff_vec.hpp"
#include "finalg/finite_group.hpp"
#include "finalg/group_constructors.hpp"
#include "finalg/submodule.hpp"

namespace finalg {

/// Arithmetic in Z_t[G] on coefficient vectors indexed by group elements.
/// Nothing here enumerates the ring.
class GroupRingArith {
 public:
  GroupRingArith(std::uint32_t t, FiniteGroup g);

  std::uint32_t modulus() const noexcept { return t_; }
  const FiniteGroup& group() const noexcept { return g_; }
  std::size_t dimension() const noexcept { return g_.order(); }

  CoeffVec zero() const { return CoeffVec(t_, g_.order()); }
  CoeffVec one() const { return basis(g_.identity()); }
  CoeffVec basis(Element g) const;
  /// sum of coeff * g over the terms
  CoeffVec from_terms(std::span<const std::pair<std::int64_t, Element>> terms) const;
  CoeffVec from_terms(std::initializer_list<std::pair<std::int64_t, Element>> terms) const {
    return from_terms(std::span<const std::pair<std::int64_t, Element>>(terms.begin(), terms.size()));
  }

  CoeffVec mul(const CoeffVec& a, const CoeffVec& b) const;
  CoeffVec pow(CoeffVec a, std::uint64_t e) const;
  /// g * v and v * g; both permute coordinates.
  CoeffVec left_mul(Element g, const CoeffVec& v) const;
  CoeffVec right_mul(const CoeffVec& v, Element g) const;

  /// Least m in 1..limit with u^m = 1, else nullopt (not a unit, or order above limit).
  std::optional<std::uint64_t> element_order(const CoeffVec& u, std::uint64_t limit = 1 << 16) const;

 private:
  std::uint32_t t_;
  FiniteGroup g_;
};

/// A two-sided ideal of Z_t[G] held as a Z_t-submodule.
struct IdealBasis {
  SubmoduleBasis basis;
  bool contains(const CoeffVec& v) const { return basis.contains(v); }
  std::size_t rank() const noexcept { return basis.rank(); }
};

/// Smallest two-sided ideal containing gens: the closure under left and right
/// multiplication by a generating set of G, which is the same as closing under
/// every element of G. Throws LengthMismatch.
IdealBasis group_ring_ideal(const GroupRingArith& zg, std::span<const CoeffVec> gens);

/// Same ideal, closing under every group element on both sides. Slower; kept
/// as a reference for tests.
IdealBasis group_ring_ideal_all_elements(const GroupRingArith& zg, std::span<const CoeffVec> gens);

/// Whether G -> Z_t[G]/I is injective. Since I is two-sided, g - h lies in I
/// exactly when g h^-1 - 1 does, so the kernel is {g : g - 1 in I}; the witness
/// is the first such g != 1, paired with the identity.
struct EmbeddingResult {
  bool injective = true;
  std::optional<std::pair<Element, Element>> witness;
};
EmbeddingResult group_embedding_injective(const GroupRingArith& zg, const IdealBasis& ideal);

/// Fixed notation inside SL_2(F_3): i = [[0,-1],[1,0]], j = [[1,1],[1,-1]],
/// k = ij, minus_one = i^2, and c an order-3 element (by default the first one
/// in canonical element order).
struct Sl23Notation {
  LinearGroup sl;
  Element one, minus_one, i, j, k, c;
  std::vector<Element> q8;         // ascending
  std::vector<Element> order_three;  // ascending
};
Sl23Notation sl23_notation(std::optional<Element> c = std::nullopt);

/// The char-2 units A = 1 + cj + (-c) and B = j + c + ci, where -c is the group
/// element minus_one * c.
CoeffVec sl23_unit_a(const GroupRingArith& zg, const Sl23Notation& s);
CoeffVec sl23_unit_b(const GroupRingArith& zg, const Sl23Notation& s);

}  // namespace finalg
