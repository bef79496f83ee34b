#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace finalg {

/// A vector in (Z_t)^n with canonical entries in [0, t).
class CoeffVec {
 public:
  CoeffVec(std::uint32_t modulus, std::size_t length);
  CoeffVec(std::uint32_t modulus, std::vector<std::uint32_t> entries);

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, std::int64_t value);
  std::span<const std::uint32_t> entries() const noexcept { return entries_; }
  bool is_zero() const noexcept;

  CoeffVec& operator+=(const CoeffVec& o);
  CoeffVec& operator-=(const CoeffVec& o);
  CoeffVec& operator*=(std::uint32_t scalar);

  friend CoeffVec operator+(CoeffVec a, const CoeffVec& b) { return a += b; }
  friend CoeffVec operator-(CoeffVec a, const CoeffVec& b) { return a -= b; }
  friend CoeffVec operator*(std::uint32_t s, CoeffVec a) { return a *= s; }
  friend bool operator==(const CoeffVec&, const CoeffVec&) = default;
  friend auto operator<=>(const CoeffVec&, const CoeffVec&) = default;

 private:
  void check_compatible(const CoeffVec& o) const;

  std::uint32_t modulus_;
  std::vector<std::uint32_t> entries_;
};

}  // namespace finalg
