#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finalg/group_expr.hpp"

namespace finalg {

/// A construction plan for a finite ring.
///
///   Zmod         Z_n                      n
///   Fq           F_q                      n = q
///   Matrix       M_k(sub)                 n = k, subs = {sub}
///   UpperTriangular U_k(sub)              n = k, subs = {sub}
///   TruncPoly    sub[x]/(x^k)             n = k, subs = {sub}
///   GroupRing    Z_t[G]                   n = t, groups = {G}
///   EndAb        End(C_d1 x ... x C_dr)   params = {d1, ..., dr}
///   Product      componentwise            subs
struct RingExpr {
  enum class Kind { Zmod, Fq, Matrix, UpperTriangular, TruncPoly, GroupRing, EndAb, Product };
  Kind kind = Kind::Zmod;
  std::uint64_t n = 1;
  std::vector<std::uint64_t> params;
  std::vector<RingExpr> subs;
  std::vector<GroupExpr> groups;

  friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

/// Canonical text in the ring grammar, e.g. "Z4 x M(2,F2)".
std::string to_string(const RingExpr& e);

}  // namespace finalg
