#include "finalg/fq_field.hpp"

#include <numeric>
#include <string>

#include "finalg/arith.hpp"
#include "finalg/error.hpp"

namespace finalg {
namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over Z_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly decode(std::uint32_t code, std::uint32_t p, unsigned k) {
  Poly out(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    out[i] = code % p;
    code /= p;
  }
  trim(out);
  return out;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = decode(static_cast<std::uint32_t>(code), p, d);
      g.resize(d, 0);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FqField::FqField(std::uint64_t p, unsigned k, const Bounds& bounds) : p_(0), k_(k), q_(0) {
  if (!is_prime(p)) throw NonPrime("fq_field: " + std::to_string(p) + " is not prime");
  if (k == 0) throw BadParameter("fq_field: degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > bounds.max_elements || q > (1u << 30))
      throw SizeExceeded("fq_field: " + std::to_string(p) + "^" + std::to_string(k) + " exceeds the size bound");
  }
  p_ = static_cast<std::uint32_t>(p);
  q_ = static_cast<std::uint32_t>(q);

  // Codes enumerate the non-leading coefficients with c_{k-1} most significant,
  // so increasing code order is lexicographic from the top coefficient down.
  for (std::uint32_t code = 0; code < q_; ++code) {
    Poly f = decode(code, p_, k_);
    f.resize(k_, 0);
    f.push_back(1);
    if (is_irreducible(f, p_)) {
      modulus_ = std::move(f);
      break;
    }
  }
  if (modulus_.empty()) throw InternalError("fq_field: no irreducible polynomial found");

  auto tables = std::make_shared<Tables>();
  tables->log.assign(q_, 0);
  if (q_ == 2) {
    tables->exp = {1};
  } else {
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
      Poly g = decode(cand, p_, k_);
      std::vector<std::uint32_t> powers;
      powers.reserve(q_ - 1);
      Poly cur{1};
      do {
        powers.push_back(encode(cur, p_));
        cur = poly_mul_mod(cur, g, modulus_, p_);
      } while (!(cur.size() == 1 && cur[0] == 1) && powers.size() < q_);
      if (powers.size() == q_ - 1) {
        tables->exp = std::move(powers);
        break;
      }
    }
  }
  if (tables->exp.size() != q_ - 1) throw InternalError("fq_field: no primitive element found");
  for (std::uint32_t i = 0; i < q_ - 1; ++i) tables->log[tables->exp[i]] = i;
  tables_ = std::move(tables);
}

FqElem FqField::element(std::uint32_t code) const {
  if (code >= q_) throw BadParameter("fq: element code out of range");
  return {code};
}

FqElem FqField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> FqField::coeffs(FqElem a) const {
  Poly out(k_, 0);
  std::uint32_t code = a.code;
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = code % p_;
    code /= p_;
  }
  return out;
}

FqElem FqField::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() > k_) throw BadParameter("fq: too many coefficients");
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + c[i] % p_;
  return {code};
}

FqElem FqField::add(FqElem a, FqElem b) const {
  if (p_ == 2) return {a.code ^ b.code};
  if (k_ == 1) return {(a.code + b.code) % p_};
  std::uint32_t out = 0, scale = 1, x = a.code, y = b.code;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return {out};
}

FqElem FqField::neg(FqElem a) const {
  if (p_ == 2) return a;
  std::uint32_t out = 0, scale = 1, x = a.code;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return {out};
}

FqElem FqField::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FqField::mul(FqElem a, FqElem b) const {
  if (a.code == 0 || b.code == 0) return {0};
  const auto& t = *tables_;
  return {t.exp[(std::uint64_t(t.log[a.code]) + t.log[b.code]) % (q_ - 1)]};
}

FqElem FqField::inv(FqElem a) const {
  if (a.code == 0) throw DivisionByZero("fq_inv: zero has no inverse");
  const auto& t = *tables_;
  return {t.exp[(q_ - 1 - t.log[a.code]) % (q_ - 1)]};
}

FqElem FqField::pow(FqElem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const auto& t = *tables_;
  return {t.exp[static_cast<std::uint32_t>((unsigned __int128)t.log[a.code] * e % (q_ - 1))]};
}

std::uint64_t FqField::mult_order(FqElem a) const {
  if (a.code == 0) throw DivisionByZero("fq: zero has no multiplicative order");
  // g^l has order n / gcd(l, n) in a cyclic group of order n
  std::uint64_t n = q_ - 1;
  return n / std::gcd<std::uint64_t>(tables_->log[a.code], n);
}

FqField fq_field(std::uint64_t p, unsigned k, const Bounds& bounds) { return FqField(p, k, bounds); }

FqField fq_field_of_order(std::uint64_t q, const Bounds& bounds) {
  auto pp = prime_power(q);
  if (!pp) throw BadParameter("fq: " + std::to_string(q) + " is not a prime power");
  return FqField(pp->prime, pp->exponent, bounds);
}

FqElem fq_inv(const FqField& field, FqElem a) { return field.inv(a); }

}  // namespace finalg
