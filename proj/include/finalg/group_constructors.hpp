#pragma once

#include <cstdint>
#include <vector>

#include "finalg/bounds.hpp"
#include "finalg/finite_group.hpp"
#include "finalg/fq_field.hpp"

namespace finalg {

// Canonical element orderings:
//   cyclic(n)        index k is g^k.
//   dihedral(m)      index b*(m/2) + a is r^a s^b, with s r s = r^-1.
//   quaternion8()    1, -1, i, -i, j, -j, k, -k.
//   symmetric(n)     permutations of 0..n-1 in lexicographic order of their
//                    image lists; the product s*t is s∘t (t applied first).
//   direct_product   (g, h) at index g*|H| + h.
//   holomorph(n)     (a, b), a in Z_n, b in Z_n^x ascending, at index a*phi(n) + pos(b).
//   agl1(q)          (a, b), a in F_q, b in F_q^x, at index a*(q-1) + (b - 1) by code.
//   gl2 / sl2        matrices [[a,b],[c,d]] in lexicographic order of (a,b,c,d) codes.

FiniteGroup trivial_group();
FiniteGroup cyclic(std::uint64_t n, const Bounds& bounds = {});
/// Dihedral group of order m (m even, m >= 2); D_2 = C_2 and D_4 = C_2 x C_2.
FiniteGroup dihedral(std::uint64_t m, const Bounds& bounds = {});
FiniteGroup quaternion8();
FiniteGroup symmetric(unsigned n);
FiniteGroup alternating(unsigned n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Bounds& bounds = {});

/// Hol(Z_n) = Z_n ⋊ Z_n^x with (a,b)(a',b') = (b'a + a', bb'), i.e. the affine
/// maps x -> bx + a composed left to right.
FiniteGroup holomorph(std::uint64_t n, const Bounds& bounds = {});

struct AffinePair {
  std::uint64_t a;  // translation
  std::uint64_t b;  // unit multiplier
};
AffinePair holomorph_decode(std::uint64_t n, Element e);
Element holomorph_encode(std::uint64_t n, AffinePair p);
/// The normal subgroup Z_n x {1}.
Subgroup holomorph_translations(std::uint64_t n);

/// AGL_1(F_q) = F_q ⋊ F_q^x, multiplication as for holomorph.
FiniteGroup agl1(std::uint64_t q, const Bounds& bounds = {});

struct Mat2 {
  FqElem a, b, c, d;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// A 2x2 matrix group over F_q together with its element matrices.
struct LinearGroup {
  FqField field;
  std::vector<Mat2> matrices;
  FiniteGroup group;
  /// Index of a matrix in `matrices`, or npos when it is not in the group.
  Element index_of(const Mat2& m) const;
  Mat2 mul(const Mat2& x, const Mat2& y) const;
  FqElem det(const Mat2& m) const;

  static constexpr Element npos = ~Element(0);
  std::vector<Element> lookup;  // code(a,b,c,d) -> index or npos
};

LinearGroup gl2(std::uint64_t q, const Bounds& bounds = {});
LinearGroup sl2(std::uint64_t q, const Bounds& bounds = {});

/// UC(F_q) = {[[x,y],[-y,x]] : x^2 + y^2 = 1} inside SL_2(F_q); q must be odd.
Subgroup uc(const LinearGroup& sl2q);

}  // namespace finalg
