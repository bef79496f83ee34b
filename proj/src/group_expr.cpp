#include "finalg/group_expr.hpp"

#include "finalg/error.hpp"
#include "finalg/group_constructors.hpp"

namespace finalg {

std::string to_string(const GroupExpr& e) {
  const std::string n = std::to_string(e.n);
  switch (e.kind) {
    case GroupExpr::Kind::Cyclic: return "C" + n;
    case GroupExpr::Kind::Dihedral: return "D" + n;
    case GroupExpr::Kind::Quaternion8: return "Q8";
    case GroupExpr::Kind::Symmetric: return "S" + n;
    case GroupExpr::Kind::Holomorph: return "Hol(" + n + ")";
    case GroupExpr::Kind::Agl1: return "AGL1(" + n + ")";
    case GroupExpr::Kind::Gl2: return "GL2(" + n + ")";
    case GroupExpr::Kind::Sl2: return "SL2(" + n + ")";
    case GroupExpr::Kind::Uc: return "UC(" + n + ")";
    case GroupExpr::Kind::Product: {
      std::string out;
      for (const auto& f : e.factors) {
        if (!out.empty()) out += " x ";
        out += f.kind == GroupExpr::Kind::Product ? "(" + to_string(f) + ")" : to_string(f);
      }
      return out;
    }
  }
  throw InternalError("to_string: unknown group kind");
}

FiniteGroup build_group(const GroupExpr& e, const Bounds& bounds) {
  switch (e.kind) {
    case GroupExpr::Kind::Cyclic: return cyclic(e.n, bounds);
    case GroupExpr::Kind::Dihedral: return dihedral(e.n, bounds);
    case GroupExpr::Kind::Quaternion8: return quaternion8();
    case GroupExpr::Kind::Symmetric:
      if (e.n < 1 || e.n > 5) throw BadParameter("symmetric: n must be in 1..5");
      return symmetric(static_cast<unsigned>(e.n));
    case GroupExpr::Kind::Holomorph: return holomorph(e.n, bounds);
    case GroupExpr::Kind::Agl1: return agl1(e.n, bounds);
    case GroupExpr::Kind::Gl2: return gl2(e.n, bounds).group;
    case GroupExpr::Kind::Sl2: return sl2(e.n, bounds).group;
    case GroupExpr::Kind::Uc: {
      const LinearGroup s = sl2(e.n, bounds);
      return subgroup_as_group(s.group, uc(s), to_string(e));
    }
    case GroupExpr::Kind::Product: {
      if (e.factors.empty()) throw BadParameter("product of no groups");
      FiniteGroup out = build_group(e.factors.front(), bounds);
      for (std::size_t i = 1; i < e.factors.size(); ++i)
        out = direct_product(out, build_group(e.factors[i], bounds), bounds);
      return out.relabeled(to_string(e));
    }
  }
  throw InternalError("build_group: unknown group kind");
}

}  // namespace finalg
