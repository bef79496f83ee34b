#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "finalg/coeff_vec.hpp"

namespace finalg {

/// A Z_t-submodule of (Z_t)^n held in reduced Howell form.
///
/// Rows are sorted by pivot column. Each pivot entry divides t, entries above a
/// pivot are reduced modulo it, and for every row r with pivot d the multiple
/// (t/d)·r lies in the span of the later rows. With that property, membership
/// is a single left-to-right reduction pass. Over Z_2 the rows are bit-packed.
/// The reduced form is canonical, so two bases are equal iff their submodules are.
class SubmoduleBasis {
 public:
  /// The zero submodule.
  SubmoduleBasis(std::uint32_t modulus, std::size_t length);

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<CoeffVec> rows() const;
  /// Additive order t / pivot of each row; the submodule has their product many elements.
  std::vector<std::uint32_t> row_orders() const;
  double log2_cardinality() const;

  bool contains(const CoeffVec& v) const;

  friend bool operator==(const SubmoduleBasis& a, const SubmoduleBasis& b);

 private:
  friend SubmoduleBasis submodule_from(std::span<const CoeffVec>, std::uint32_t, std::size_t);
  friend SubmoduleBasis closure_under_operators(std::span<const CoeffVec>,
                                                std::span<const std::function<CoeffVec(const CoeffVec&)>>,
                                                std::uint32_t, std::size_t);

  using Words = std::vector<std::uint64_t>;
  using Row = std::vector<std::uint32_t>;

  bool bit_packed() const noexcept { return modulus_ == 2; }
  void check(const CoeffVec& v) const;
  /// Adds v to the span; returns false if it was already a member.
  bool insert(const CoeffVec& v);

  Words pack(const CoeffVec& v) const;
  bool reduce_bits(Words& w) const;
  void rebuild_howell(std::vector<Row> pool);

  std::uint32_t modulus_;
  std::size_t length_;
  std::vector<std::size_t> pivots_;
  std::vector<Words> bit_rows_;  // modulus 2
  std::vector<Row> rows_;        // other moduli
};

/// Smallest submodule containing the given vectors; throws LengthMismatch.
SubmoduleBasis submodule_from(std::span<const CoeffVec> vectors, std::uint32_t modulus, std::size_t length);

using LinearOperator = std::function<CoeffVec(const CoeffVec&)>;

/// Smallest submodule containing the generators and mapped into itself by
/// every operator. Operators must be Z_t-linear.
SubmoduleBasis closure_under_operators(std::span<const CoeffVec> generators, std::span<const LinearOperator> operators,
                                       std::uint32_t modulus, std::size_t length);

}  // namespace finalg
