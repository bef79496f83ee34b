#include "finalg/arith.hpp"

#include <numeric>

#include "finalg/error.hpp"

namespace finalg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.push_back({d, k});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::optional<PrimePower> prime_power(std::uint64_t q) {
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t phi = n;
  for (auto [p, k] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a % m);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) return std::nullopt;
  std::int64_t mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((s0 % mm) + mm) % mm);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  unsigned __int128 result = 1 % m, b = base % m;
  while (exp) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

ZMod::ZMod(std::uint64_t value, std::uint64_t modulus) : value_(0), modulus_(modulus) {
  if (modulus == 0) throw BadParameter("ZMod: modulus must be at least 1");
  value_ = value % modulus;
}

bool ZMod::is_unit() const { return std::gcd(value_, modulus_) == 1; }

ZMod ZMod::inverse() const {
  auto inv = inverse_mod(value_, modulus_);
  if (!inv) throw DivisionByZero("ZMod: " + std::to_string(value_) + " is not a unit mod " + std::to_string(modulus_));
  return {*inv, modulus_};
}

ZMod ZMod::pow(std::uint64_t exp) const { return {pow_mod(value_, exp, modulus_), modulus_}; }

static void require_same(ZMod a, ZMod b) {
  if (a.modulus() != b.modulus()) throw BadParameter("ZMod: mixed moduli");
}

ZMod operator+(ZMod a, ZMod b) {
  require_same(a, b);
  return {a.value_ + b.value_, a.modulus_};
}

ZMod operator-(ZMod a, ZMod b) {
  require_same(a, b);
  return {a.value_ + a.modulus_ - b.value_, a.modulus_};
}

ZMod operator*(ZMod a, ZMod b) {
  require_same(a, b);
  return {static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.value_) * b.value_ % a.modulus_), a.modulus_};
}

ZMod operator-(ZMod a) { return {a.modulus_ - a.value_, a.modulus_}; }

std::ostream& operator<<(std::ostream& os, ZMod a) { return os << a.value_ << " (mod " << a.modulus_ << ")"; }

std::vector<std::uint64_t> units_mod(std::uint64_t m) {
  if (m == 1) return {0};
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 1; a < m; ++a)
    if (std::gcd(a, m) == 1) out.push_back(a);
  return out;
}

}  // namespace finalg
