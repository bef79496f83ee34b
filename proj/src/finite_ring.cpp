#include "finalg/finite_ring.hpp"

#include <limits>
#include <numeric>
#include <random>

#include "finalg/error.hpp"
#include "finalg/fq_field.hpp"

namespace finalg {

FiniteRing FiniteRing::make(std::uint64_t size, RingElem zero, RingElem one, BinFn add, BinFn mul, UnFn neg,
                            std::string label) {
  if (size < 2) throw BadParameter("finite ring: the zero ring is not supported");
  auto impl = std::make_shared<Impl>();
  impl->size = size;
  impl->zero = zero;
  impl->one = one;
  impl->label = std::move(label);
  if (size <= kTableLimit) {
    impl->add_table.resize(size * size);
    impl->mul_table.resize(size * size);
    impl->neg_table.resize(size);
    for (RingElem a = 0; a < size; ++a) {
      impl->neg_table[a] = static_cast<std::uint32_t>(neg(a));
      for (RingElem b = 0; b < size; ++b) {
        impl->add_table[a * size + b] = static_cast<std::uint32_t>(add(a, b));
        impl->mul_table[a * size + b] = static_cast<std::uint32_t>(mul(a, b));
      }
    }
  }
  impl->add = std::move(add);
  impl->mul = std::move(mul);
  impl->neg = std::move(neg);
  std::uint64_t c = 1;
  for (RingElem x = one; x != zero; x = impl->add_table.empty() ? impl->add(x, one) : impl->add_table[x * size + one])
    ++c;
  impl->characteristic = c;
  return FiniteRing(std::move(impl));
}

RingElem FiniteRing::pow(RingElem a, std::uint64_t e) const {
  RingElem result = one();
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t characteristic(const FiniteRing& r) { return r.characteristic(); }

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) out = sat_mul(out, base);
  return out;
}

std::uint64_t group_order(const GroupExpr& g) {
  switch (g.kind) {
    case GroupExpr::Kind::Product: {
      std::uint64_t n = 1;
      for (const auto& f : g.factors) n = sat_mul(n, group_order(f));
      return n;
    }
    default: return build_group(g).order();
  }
}

// Decoding/encoding of an index as little-endian digits in a fixed radix.
struct Radix {
  std::uint64_t base;
  std::size_t digits;

  std::vector<RingElem> decode(RingElem x) const {
    std::vector<RingElem> d(digits);
    for (auto& v : d) {
      v = x % base;
      x /= base;
    }
    return d;
  }
  RingElem encode(const std::vector<RingElem>& d) const {
    RingElem x = 0;
    for (std::size_t i = d.size(); i-- > 0;) x = x * base + d[i];
    return x;
  }
};

FiniteRing build_zmod(std::uint64_t n) {
  if (n < 2) throw BadParameter("Z_n: n must be at least 2");
  return FiniteRing::make(
      n, 0, 1, [n](RingElem a, RingElem b) { return (a + b) % n; },
      [n](RingElem a, RingElem b) { return static_cast<RingElem>((unsigned __int128)a * b % n); },
      [n](RingElem a) { return (n - a) % n; }, "Z" + std::to_string(n));
}

FiniteRing build_fq(std::uint64_t q, const Bounds& bounds) {
  const FqField f = fq_field_of_order(q, bounds);
  return FiniteRing::make(
      q, 0, 1,
      [f](RingElem a, RingElem b) { return f.add({std::uint32_t(a)}, {std::uint32_t(b)}).code; },
      [f](RingElem a, RingElem b) { return f.mul({std::uint32_t(a)}, {std::uint32_t(b)}).code; },
      [f](RingElem a) { return f.neg({std::uint32_t(a)}).code; }, "F" + std::to_string(q));
}

// Matrices over `sub` with entries at the given (row, col) positions; positions
// must be closed under the product pattern (full or upper triangular).
FiniteRing build_matrix_like(std::uint64_t k, const FiniteRing& sub, bool upper, std::string label) {
  if (k < 1) throw BadParameter("matrix ring: size must be positive");
  std::vector<long> slot(k * k, -1);
  std::size_t count = 0;
  for (std::uint64_t i = 0; i < k; ++i)
    for (std::uint64_t j = 0; j < k; ++j)
      if (!upper || i <= j) slot[i * k + j] = static_cast<long>(count++);
  const Radix radix{sub.size(), count};
  auto entry = [=](const std::vector<RingElem>& d, std::uint64_t i, std::uint64_t j) {
    const long s = slot[i * k + j];
    return s < 0 ? sub.zero() : d[static_cast<std::size_t>(s)];
  };
  auto add = [=](RingElem a, RingElem b) {
    auto da = radix.decode(a), db = radix.decode(b);
    for (std::size_t i = 0; i < count; ++i) da[i] = sub.add(da[i], db[i]);
    return radix.encode(da);
  };
  auto neg = [=](RingElem a) {
    auto da = radix.decode(a);
    for (auto& x : da) x = sub.neg(x);
    return radix.encode(da);
  };
  auto mul = [=](RingElem a, RingElem b) {
    const auto da = radix.decode(a), db = radix.decode(b);
    std::vector<RingElem> dc(count, sub.zero());
    for (std::uint64_t i = 0; i < k; ++i)
      for (std::uint64_t j = 0; j < k; ++j) {
        const long s = slot[i * k + j];
        if (s < 0) continue;
        RingElem acc = sub.zero();
        for (std::uint64_t l = 0; l < k; ++l) acc = sub.add(acc, sub.mul(entry(da, i, l), entry(db, l, j)));
        dc[static_cast<std::size_t>(s)] = acc;
      }
    return radix.encode(dc);
  };
  std::vector<RingElem> id(count, sub.zero());
  for (std::uint64_t i = 0; i < k; ++i) id[static_cast<std::size_t>(slot[i * k + i])] = sub.one();
  return FiniteRing::make(sat_pow(sub.size(), count), radix.encode(std::vector<RingElem>(count, sub.zero())),
                          radix.encode(id), add, mul, neg, std::move(label));
}

FiniteRing build_trunc_poly(const FiniteRing& sub, std::uint64_t k, std::string label) {
  if (k < 1) throw BadParameter("truncated polynomial ring: k must be positive");
  const Radix radix{sub.size(), k};
  auto add = [=](RingElem a, RingElem b) {
    auto da = radix.decode(a), db = radix.decode(b);
    for (std::size_t i = 0; i < k; ++i) da[i] = sub.add(da[i], db[i]);
    return radix.encode(da);
  };
  auto neg = [=](RingElem a) {
    auto da = radix.decode(a);
    for (auto& x : da) x = sub.neg(x);
    return radix.encode(da);
  };
  auto mul = [=](RingElem a, RingElem b) {
    const auto da = radix.decode(a), db = radix.decode(b);
    std::vector<RingElem> dc(k, sub.zero());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; i + j < k; ++j) dc[i + j] = sub.add(dc[i + j], sub.mul(da[i], db[j]));
    return radix.encode(dc);
  };
  std::vector<RingElem> zero(k, sub.zero()), one = zero;
  one[0] = sub.one();
  return FiniteRing::make(sat_pow(sub.size(), k), radix.encode(zero), radix.encode(one), add, mul, neg,
                          std::move(label));
}

FiniteRing build_group_ring(std::uint64_t t, const FiniteGroup& g, std::string label) {
  if (t < 2) throw BadParameter("group ring: coefficient modulus must be at least 2");
  const std::size_t n = g.order();
  const Radix radix{t, n};
  auto add = [=](RingElem a, RingElem b) {
    auto da = radix.decode(a), db = radix.decode(b);
    for (std::size_t i = 0; i < n; ++i) da[i] = (da[i] + db[i]) % t;
    return radix.encode(da);
  };
  auto neg = [=](RingElem a) {
    auto da = radix.decode(a);
    for (auto& x : da) x = (t - x) % t;
    return radix.encode(da);
  };
  auto mul = [=](RingElem a, RingElem b) {
    const auto da = radix.decode(a), db = radix.decode(b);
    std::vector<RingElem> dc(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (!da[x]) continue;
      for (std::size_t y = 0; y < n; ++y)
        if (db[y]) {
          auto& c = dc[g.mul(Element(x), Element(y))];
          c = (c + da[x] * db[y]) % t;
        }
    }
    return radix.encode(dc);
  };
  std::vector<RingElem> one(n, 0);
  one[g.identity()] = 1;
  return FiniteRing::make(sat_pow(t, n), 0, radix.encode(one), add, mul, neg, std::move(label));
}

// Endomorphisms of C_d1 x ... x C_dr. f(e_j) = sum_i a_ij e_i where a_ij is a
// multiple of step_ij = d_i / gcd(d_i, d_j); the digit stored is a_ij / step_ij.
FiniteRing build_end_ab(const std::vector<std::uint64_t>& d, std::string label) {
  if (d.empty()) throw BadParameter("End: need at least one cyclic factor");
  for (auto x : d)
    if (x < 2) throw BadParameter("End: cyclic orders must be at least 2");
  const std::size_t r = d.size();
  std::vector<std::uint64_t> step(r * r), range(r * r);
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const std::uint64_t g = std::gcd(d[i], d[j]);
      step[i * r + j] = d[i] / g;
      range[i * r + j] = g;
      size = sat_mul(size, g);
    }
  auto decode = [=](RingElem x) {
    std::vector<std::uint64_t> a(r * r);
    for (std::size_t s = 0; s < r * r; ++s) {
      a[s] = (x % range[s]) * step[s];
      x /= range[s];
    }
    return a;
  };
  auto encode = [=](const std::vector<std::uint64_t>& a) {
    RingElem x = 0;
    for (std::size_t s = r * r; s-- > 0;) {
      const std::size_t i = s / r;
      const std::uint64_t v = a[s] % d[i];
      if (v % step[s] != 0) throw InternalError("End: composite is not a homomorphism");
      x = x * range[s] + v / step[s];
    }
    return x;
  };
  auto add = [=](RingElem x, RingElem y) {
    auto a = decode(x), b = decode(y);
    for (std::size_t s = 0; s < r * r; ++s) a[s] += b[s];
    return encode(a);
  };
  auto neg = [=](RingElem x) {
    auto a = decode(x);
    for (std::size_t s = 0; s < r * r; ++s) a[s] = d[s / r] - a[s] % d[s / r];
    return encode(a);
  };
  // (f g)(e_j) = f(g(e_j)) = sum_l (sum_i A_f[l][i] A_g[i][j]) e_l
  auto mul = [=](RingElem x, RingElem y) {
    const auto f = decode(x), g = decode(y);
    std::vector<std::uint64_t> c(r * r, 0);
    for (std::size_t l = 0; l < r; ++l)
      for (std::size_t j = 0; j < r; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < r; ++i) acc = (acc + f[l * r + i] * g[i * r + j]) % d[l];
        c[l * r + j] = acc;
      }
    return encode(c);
  };
  std::vector<std::uint64_t> id(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) id[i * r + i] = 1;
  return FiniteRing::make(size, 0, encode(id), add, mul, neg, std::move(label));
}

FiniteRing build_product(const std::vector<FiniteRing>& parts, std::string label) {
  if (parts.empty()) throw BadParameter("product of no rings");
  // index = sum part_i * stride_i, the last part varying fastest.
  std::vector<std::uint64_t> stride(parts.size());
  std::uint64_t size = 1;
  for (std::size_t i = parts.size(); i-- > 0;) {
    stride[i] = size;
    size = sat_mul(size, parts[i].size());
  }
  auto split = [=](RingElem x) {
    std::vector<RingElem> c(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) c[i] = (x / stride[i]) % parts[i].size();
    return c;
  };
  auto join = [=](const std::vector<RingElem>& c) {
    RingElem x = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) x += c[i] * stride[i];
    return x;
  };
  auto lift = [=](auto op) {
    return [=](RingElem a, RingElem b) {
      auto ca = split(a), cb = split(b);
      for (std::size_t i = 0; i < parts.size(); ++i) ca[i] = op(parts[i], ca[i], cb[i]);
      return join(ca);
    };
  };
  auto add = lift([](const FiniteRing& r, RingElem a, RingElem b) { return r.add(a, b); });
  auto mul = lift([](const FiniteRing& r, RingElem a, RingElem b) { return r.mul(a, b); });
  auto neg = [=](RingElem a) {
    auto c = split(a);
    for (std::size_t i = 0; i < parts.size(); ++i) c[i] = parts[i].neg(c[i]);
    return join(c);
  };
  std::vector<RingElem> zero(parts.size()), one(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    zero[i] = parts[i].zero();
    one[i] = parts[i].one();
  }
  return FiniteRing::make(size, join(zero), join(one), add, mul, neg, std::move(label));
}

}  // namespace

std::uint64_t ring_size(const RingExpr& e) {
  switch (e.kind) {
    case RingExpr::Kind::Zmod:
    case RingExpr::Kind::Fq: return e.n;
    case RingExpr::Kind::Matrix: return sat_pow(ring_size(e.subs.at(0)), sat_mul(e.n, e.n));
    case RingExpr::Kind::UpperTriangular: return sat_pow(ring_size(e.subs.at(0)), e.n * (e.n + 1) / 2);
    case RingExpr::Kind::TruncPoly: return sat_pow(ring_size(e.subs.at(0)), e.n);
    case RingExpr::Kind::GroupRing: return sat_pow(e.n, group_order(e.groups.at(0)));
    case RingExpr::Kind::EndAb: {
      std::uint64_t size = 1;
      for (auto a : e.params)
        for (auto b : e.params) size = sat_mul(size, std::gcd(a, b));
      return size;
    }
    case RingExpr::Kind::Product: {
      std::uint64_t size = 1;
      for (const auto& s : e.subs) size = sat_mul(size, ring_size(s));
      return size;
    }
  }
  throw InternalError("ring_size: unknown ring kind");
}

std::string to_string(const RingExpr& e) {
  const std::string n = std::to_string(e.n);
  switch (e.kind) {
    case RingExpr::Kind::Zmod: return "Z" + n;
    case RingExpr::Kind::Fq: return "F" + n;
    case RingExpr::Kind::Matrix: return "M(" + n + "," + to_string(e.subs.at(0)) + ")";
    case RingExpr::Kind::UpperTriangular: return "U(" + n + "," + to_string(e.subs.at(0)) + ")";
    case RingExpr::Kind::TruncPoly: return "TP(" + to_string(e.subs.at(0)) + "," + n + ")";
    case RingExpr::Kind::GroupRing: return "GR(" + n + "," + to_string(e.groups.at(0)) + ")";
    case RingExpr::Kind::EndAb: {
      std::string out = "End(";
      for (std::size_t i = 0; i < e.params.size(); ++i) out += (i ? "," : "") + std::to_string(e.params[i]);
      return out + ")";
    }
    case RingExpr::Kind::Product: {
      std::string out;
      for (const auto& s : e.subs) {
        if (!out.empty()) out += " x ";
        out += s.kind == RingExpr::Kind::Product ? "(" + to_string(s) + ")" : to_string(s);
      }
      return out;
    }
  }
  throw InternalError("to_string: unknown ring kind");
}

FiniteRing build_ring(const RingExpr& e, const Bounds& bounds) {
  const std::uint64_t size = ring_size(e);
  const std::string label = to_string(e);
  if (size > bounds.max_elements)
    throw SizeExceeded(label + ": " + (size == kSaturated ? std::string("more than 2^64") : std::to_string(size)) +
                       " elements exceed the enumeration bound of " + std::to_string(bounds.max_elements));
  switch (e.kind) {
    case RingExpr::Kind::Zmod: return build_zmod(e.n);
    case RingExpr::Kind::Fq: return build_fq(e.n, bounds);
    case RingExpr::Kind::Matrix: return build_matrix_like(e.n, build_ring(e.subs.at(0), bounds), false, label);
    case RingExpr::Kind::UpperTriangular:
      return build_matrix_like(e.n, build_ring(e.subs.at(0), bounds), true, label);
    case RingExpr::Kind::TruncPoly: return build_trunc_poly(build_ring(e.subs.at(0), bounds), e.n, label);
    case RingExpr::Kind::GroupRing: return build_group_ring(e.n, build_group(e.groups.at(0), bounds), label);
    case RingExpr::Kind::EndAb: return build_end_ab(e.params, label);
    case RingExpr::Kind::Product: {
      std::vector<FiniteRing> parts;
      for (const auto& s : e.subs) parts.push_back(build_ring(s, bounds));
      return build_product(parts, label);
    }
  }
  throw InternalError("build_ring: unknown ring kind");
}

bool satisfies_ring_axioms(const FiniteRing& r, std::uint64_t exhaustive_limit, std::size_t samples,
                           std::uint64_t seed) {
  const std::uint64_t n = r.size();
  for (RingElem a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a || r.add(r.neg(a), a) != r.zero()) return false;
    if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) return false;
  }
  if (n <= 4096) {
    for (RingElem a = 0; a < n; ++a)
      for (RingElem b = 0; b < n; ++b)
        if (r.add(a, b) != r.add(b, a)) return false;
  }
  auto triple_ok = [&](RingElem a, RingElem b, RingElem c) {
    return r.add(r.add(a, b), c) == r.add(a, r.add(b, c)) && r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)) &&
           r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)) &&
           r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c));
  };
  if (n <= exhaustive_limit) {
    for (RingElem a = 0; a < n; ++a)
      for (RingElem b = 0; b < n; ++b)
        for (RingElem c = 0; c < n; ++c)
          if (!triple_ok(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<RingElem> pick(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const RingElem a = pick(rng), b = pick(rng), c = pick(rng);
    if (!triple_ok(a, b, c)) return false;
    if (n > 4096 && r.add(a, b) != r.add(b, a)) return false;
  }
  return true;
}

}  // namespace finalg
