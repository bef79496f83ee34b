#include "finalg/submodule.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <numeric>
#include <optional>
#include <string>

#include "finalg/arith.hpp"
#include "finalg/error.hpp"

namespace finalg {

// ---------------------------------------------------------------- CoeffVec

CoeffVec::CoeffVec(std::uint32_t modulus, std::size_t length) : modulus_(modulus), entries_(length, 0) {
  if (modulus < 2) throw BadParameter("CoeffVec: modulus must be at least 2");
}

CoeffVec::CoeffVec(std::uint32_t modulus, std::vector<std::uint32_t> entries)
    : modulus_(modulus), entries_(std::move(entries)) {
  if (modulus < 2) throw BadParameter("CoeffVec: modulus must be at least 2");
  for (auto& e : entries_) e %= modulus_;
}

void CoeffVec::set(std::size_t i, std::int64_t value) {
  std::int64_t r = value % static_cast<std::int64_t>(modulus_);
  if (r < 0) r += modulus_;
  entries_.at(i) = static_cast<std::uint32_t>(r);
}

bool CoeffVec::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](std::uint32_t e) { return e == 0; });
}

void CoeffVec::check_compatible(const CoeffVec& o) const {
  if (o.modulus_ != modulus_ || o.entries_.size() != entries_.size())
    throw LengthMismatch("CoeffVec: length or modulus mismatch");
}

CoeffVec& CoeffVec::operator+=(const CoeffVec& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = (entries_[i] + o.entries_[i]) % modulus_;
  return *this;
}

CoeffVec& CoeffVec::operator-=(const CoeffVec& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] = (entries_[i] + modulus_ - o.entries_[i]) % modulus_;
  return *this;
}

CoeffVec& CoeffVec::operator*=(std::uint32_t s) {
  for (auto& e : entries_) e = static_cast<std::uint32_t>(std::uint64_t(e) * s % modulus_);
  return *this;
}

// ---------------------------------------------------------------- Howell form helpers

namespace {

using Row = std::vector<std::uint32_t>;

bool row_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](std::uint32_t e) { return e == 0; });
}

// out = a*x + b*y (mod m), coefficients given as signed integers.
Row combine(std::int64_t a, const Row& x, std::int64_t b, const Row& y, std::uint32_t m) {
  const std::int64_t mm = m;
  std::int64_t am = ((a % mm) + mm) % mm, bm = ((b % mm) + mm) % mm;
  Row out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = static_cast<std::uint32_t>((am * x[i] + bm * y[i]) % mm);
  return out;
}

Row scaled(const Row& x, std::uint64_t s, std::uint32_t m) {
  Row out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<std::uint32_t>(s % m * x[i] % m);
  return out;
}

// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  s = s0;
  t = t0;
  return r0;
}

// Unit u mod m with u*e = gcd(e, m) (mod m).
std::uint64_t normalizing_unit(std::uint32_t e, std::uint32_t m) {
  const std::uint64_t d = std::gcd(e, m);
  const std::uint64_t mod = m / d;
  const std::uint64_t w = (e / d) % mod;
  const std::uint64_t u0 = mod == 1 ? 0 : *inverse_mod(w, mod);
  for (std::uint64_t u = u0; u < std::uint64_t(m) + u0; u += mod) {
    if (std::gcd<std::uint64_t>(u % m, m) == 1) return u % m;
  }
  throw InternalError("submodule: no normalizing unit");
}

}  // namespace

// ---------------------------------------------------------------- SubmoduleBasis

SubmoduleBasis::SubmoduleBasis(std::uint32_t modulus, std::size_t length) : modulus_(modulus), length_(length) {
  if (modulus < 2) throw BadParameter("SubmoduleBasis: modulus must be at least 2");
}

void SubmoduleBasis::check(const CoeffVec& v) const {
  if (v.modulus() != modulus_ || v.size() != length_)
    throw LengthMismatch("submodule: vector has length " + std::to_string(v.size()) + " mod " +
                         std::to_string(v.modulus()) + ", expected length " + std::to_string(length_) + " mod " +
                         std::to_string(modulus_));
}

SubmoduleBasis::Words SubmoduleBasis::pack(const CoeffVec& v) const {
  Words w((length_ + 63) / 64, 0);
  for (std::size_t i = 0; i < length_; ++i)
    if (v[i]) w[i / 64] |= std::uint64_t(1) << (i % 64);
  return w;
}

// Reduces w against the reduced echelon rows; returns true if w becomes zero.
bool SubmoduleBasis::reduce_bits(Words& w) const {
  for (std::size_t r = 0; r < bit_rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (w[p / 64] >> (p % 64) & 1)
      for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= bit_rows_[r][k];
  }
  return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
}

bool SubmoduleBasis::contains(const CoeffVec& v) const {
  check(v);
  if (bit_packed()) {
    Words w = pack(v);
    return reduce_bits(w);
  }
  Row x(v.entries().begin(), v.entries().end());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t c = pivots_[r];
    const std::uint32_t d = rows_[r][c];
    if (x[c] % d != 0) return false;
    const std::uint64_t f = x[c] / d;
    if (f == 0) continue;
    for (std::size_t i = c; i < length_; ++i)
      x[i] = static_cast<std::uint32_t>((x[i] + modulus_ - f * rows_[r][i] % modulus_) % modulus_);
  }
  return row_zero(x);
}

bool SubmoduleBasis::insert(const CoeffVec& v) {
  check(v);
  if (bit_packed()) {
    Words w = pack(v);
    if (reduce_bits(w)) return false;
    std::size_t p = 0;
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k]) {
        p = k * 64 + static_cast<std::size_t>(std::countr_zero(w[k]));
        break;
      }
    for (auto& row : bit_rows_)
      if (row[p / 64] >> (p % 64) & 1)
        for (std::size_t k = 0; k < w.size(); ++k) row[k] ^= w[k];
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, p);
    bit_rows_.insert(bit_rows_.begin() + idx, std::move(w));
    return true;
  }
  if (contains(v)) return false;
  std::vector<Row> pool = rows_;
  pool.emplace_back(v.entries().begin(), v.entries().end());
  rebuild_howell(std::move(pool));
  return true;
}

void SubmoduleBasis::rebuild_howell(std::vector<Row> pool) {
  const std::uint32_t m = modulus_;
  std::erase_if(pool, row_zero);
  std::vector<Row> result;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < length_ && !pool.empty(); ++col) {
    std::vector<Row> rest;
    std::optional<Row> pivot;
    for (auto& r : pool) {
      if (r[col] == 0) {
        rest.push_back(std::move(r));
        continue;
      }
      if (!pivot) {
        pivot = std::move(r);
        continue;
      }
      const std::int64_t a = (*pivot)[col], b = r[col];
      std::int64_t s = 0, t = 0;
      const std::int64_t g = ext_gcd(a, b, s, t);
      Row new_pivot = combine(s, *pivot, t, r, m);
      Row eliminated = combine(b / g, *pivot, -(a / g), r, m);
      pivot = std::move(new_pivot);
      if (!row_zero(eliminated)) rest.push_back(std::move(eliminated));
    }
    if (pivot) {
      Row p = scaled(*pivot, normalizing_unit((*pivot)[col], m), m);
      const std::uint32_t d = p[col];
      if (d != 1) {
        Row ann = scaled(p, m / d, m);
        if (!row_zero(ann)) rest.push_back(std::move(ann));
      }
      result.push_back(std::move(p));
      pivots.push_back(col);
    }
    pool = std::move(rest);
  }
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < result.size(); ++i) {
    const std::size_t c = pivots[i];
    const std::uint32_t d = result[i][c];
    for (std::size_t j = 0; j < i; ++j) {
      const std::uint64_t f = result[j][c] / d;
      if (f == 0) continue;
      for (std::size_t k = c; k < length_; ++k)
        result[j][k] = static_cast<std::uint32_t>((result[j][k] + m - f * result[i][k] % m) % m);
    }
  }
  rows_ = std::move(result);
  pivots_ = std::move(pivots);
}

std::vector<CoeffVec> SubmoduleBasis::rows() const {
  std::vector<CoeffVec> out;
  if (bit_packed()) {
    for (const auto& w : bit_rows_) {
      CoeffVec v(2, length_);
      for (std::size_t i = 0; i < length_; ++i) v.set(i, (w[i / 64] >> (i % 64)) & 1);
      out.push_back(std::move(v));
    }
  } else {
    for (const auto& r : rows_) out.emplace_back(modulus_, r);
  }
  return out;
}

std::vector<std::uint32_t> SubmoduleBasis::row_orders() const {
  std::vector<std::uint32_t> out;
  if (bit_packed()) return std::vector<std::uint32_t>(bit_rows_.size(), 2);
  for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back(modulus_ / rows_[i][pivots_[i]]);
  return out;
}

double SubmoduleBasis::log2_cardinality() const {
  double s = 0;
  for (auto o : row_orders()) s += std::log2(static_cast<double>(o));
  return s;
}

bool operator==(const SubmoduleBasis& a, const SubmoduleBasis& b) {
  return a.modulus_ == b.modulus_ && a.length_ == b.length_ && a.pivots_ == b.pivots_ &&
         a.bit_rows_ == b.bit_rows_ && a.rows_ == b.rows_;
}

SubmoduleBasis submodule_from(std::span<const CoeffVec> vectors, std::uint32_t modulus, std::size_t length) {
  SubmoduleBasis basis(modulus, length);
  for (const auto& v : vectors) basis.insert(v);
  return basis;
}

SubmoduleBasis closure_under_operators(std::span<const CoeffVec> generators, std::span<const LinearOperator> operators,
                                       std::uint32_t modulus, std::size_t length) {
  SubmoduleBasis basis(modulus, length);
  std::deque<CoeffVec> work(generators.begin(), generators.end());
  while (!work.empty()) {
    CoeffVec v = std::move(work.front());
    work.pop_front();
    if (!basis.insert(v)) continue;
    for (const auto& op : operators) {
      CoeffVec image = op(v);
      basis.check(image);
      work.push_back(std::move(image));
    }
  }
  return basis;
}

}  // namespace finalg
