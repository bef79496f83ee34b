#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace finalg {

bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

/// Returns p, k with q = p^k, or nullopt if q is not a prime power (q = 1 included).
std::optional<PrimePower> prime_power(std::uint64_t q);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<PrimePower> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Multiplicative inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// An integer modulo m with canonical representative in [0, m).
class ZMod {
 public:
  ZMod(std::uint64_t value, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  bool is_unit() const;
  /// Throws DivisionByZero when the value is not a unit.
  ZMod inverse() const;
  ZMod pow(std::uint64_t exp) const;

  friend ZMod operator+(ZMod a, ZMod b);
  friend ZMod operator-(ZMod a, ZMod b);
  friend ZMod operator*(ZMod a, ZMod b);
  friend ZMod operator-(ZMod a);
  friend bool operator==(ZMod a, ZMod b) = default;
  friend std::ostream& operator<<(std::ostream& os, ZMod a);

 private:
  std::uint64_t value_;
  std::uint64_t modulus_;
};

/// Units of Z_m in increasing order; for m = 1 this is {0}.
std::vector<std::uint64_t> units_mod(std::uint64_t m);

}  // namespace finalg
