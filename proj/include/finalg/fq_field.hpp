#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "finalg/bounds.hpp"

namespace finalg {

/// An element of F_q encoded as sum(coeff_i * p^i) over its little-endian
/// coefficient list; code 0 is zero and code 1 is one.
struct FqElem {
  std::uint32_t code = 0;
  friend bool operator==(FqElem, FqElem) = default;
  friend auto operator<=>(FqElem, FqElem) = default;
};

/// The field F_{p^k} = Z_p[x]/(f) for the lexicographically smallest monic
/// irreducible f of degree k. "Smallest" compares the non-leading coefficients
/// from x^{k-1} down to x^0, so the choice is reproducible across runs.
class FqField {
 public:
  FqField(std::uint64_t p, unsigned k, const Bounds& bounds = {});

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Coefficients of the modulus, little-endian, length k + 1 (monic).
  const std::vector<std::uint32_t>& modulus_poly() const noexcept { return modulus_; }

  FqElem zero() const noexcept { return {0}; }
  FqElem one() const noexcept { return {1}; }
  FqElem element(std::uint32_t code) const;
  /// Image of an integer in the prime subfield.
  FqElem from_int(std::int64_t n) const;
  std::vector<std::uint32_t> coeffs(FqElem a) const;
  FqElem from_coeffs(const std::vector<std::uint32_t>& coeffs) const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  /// Throws DivisionByZero for a = 0.
  FqElem inv(FqElem a) const;
  FqElem pow(FqElem a, std::uint64_t e) const;

  /// A generator of the cyclic multiplicative group.
  FqElem primitive_element() const noexcept { return {tables_->exp[1]}; }
  /// Multiplicative order of a nonzero element.
  std::uint64_t mult_order(FqElem a) const;

  friend bool operator==(const FqField& a, const FqField& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> exp;  // exp[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log;  // log[exp[i]] = i; log[0] unused
  };

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::shared_ptr<const Tables> tables_;
};

FqField fq_field(std::uint64_t p, unsigned k, const Bounds& bounds = {});
/// Field of order q; throws BadParameter unless q is a prime power.
FqField fq_field_of_order(std::uint64_t q, const Bounds& bounds = {});
FqElem fq_inv(const FqField& field, FqElem a);

}  // namespace finalg
