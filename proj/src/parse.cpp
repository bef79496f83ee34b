#include "finalg/parse.hpp"

#include <cctype>
#include <limits>

#include "finalg/arith.hpp"
#include "finalg/error.hpp"

namespace finalg {

ParseError::ParseError(std::string message, std::size_t position, std::vector<std::string> expected)
    : Error([&] {
        std::string m = message + " at position " + std::to_string(position);
        if (!expected.empty()) {
          m += " (expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) m += (i ? ", " : "") + expected[i];
          m += ")";
        }
        return m;
      }()),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

const std::vector<std::string> kGroupAtoms = {"C<n>",     "D<n>",     "Q8",       "S<n>",  "Hol(",
                                              "AGL1(",    "GL2(",     "SL2(",     "UC(",   "("};
const std::vector<std::string> kRingAtoms = {"Z<n>", "F<q>", "M(", "U(", "TP(", "GR(", "End(", "("};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr group_expr() {
    std::vector<GroupExpr> terms{group_term()};
    while (accept_product()) terms.push_back(group_term());
    if (terms.size() == 1) return std::move(terms.front());
    return GroupExpr{GroupExpr::Kind::Product, 1, std::move(terms)};
  }

  RingExpr ring_expr() {
    std::vector<RingExpr> terms{ring_term()};
    while (accept_product()) terms.push_back(ring_term());
    if (terms.size() == 1) return std::move(terms.front());
    RingExpr e;
    e.kind = RingExpr::Kind::Product;
    e.subs = std::move(terms);
    return e;
  }

  void finish(const std::vector<std::string>& more) {
    skip_ws();
    if (pos_ != text_.size()) {
      std::vector<std::string> expected = more;
      expected.push_back("end of input");
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_, expected);
    }
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(std::string_view word) {
    if (!accept(word)) fail({std::string(word)});
  }

  bool accept_product() {
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError("unexpected " + found, pos_, std::move(expected));
  }

  [[noreturn]] void invalid(std::size_t at, const std::string& why) const { throw ParseError(why, at, {}); }

  std::uint64_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t d = text_[pos_] - '0';
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) invalid(start, "number too large");
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail({"<integer>"});
    return v;
  }

  // Number with its starting position, for parameter diagnostics.
  std::pair<std::uint64_t, std::size_t> located_number() {
    skip_ws();
    const std::size_t at = pos_;
    return {number(), at};
  }

  std::uint64_t prime_power_param(const char* what, bool odd) {
    const auto [q, at] = located_number();
    if (!prime_power(q)) invalid(at, std::string(what) + " needs a prime power, got " + std::to_string(q));
    if (odd && q % 2 == 0) invalid(at, std::string(what) + " needs an odd prime power, got " + std::to_string(q));
    return q;
  }

  std::uint64_t positive_param(const char* what) {
    const auto [n, at] = located_number();
    if (n == 0) invalid(at, std::string(what) + " needs a positive integer");
    return n;
  }

  GroupExpr group_term() {
    using K = GroupExpr::Kind;
    skip_ws();
    if (accept("(")) {
      GroupExpr e = group_expr();
      expect(")");
      return e;
    }
    // Longer keywords first so that "SL2(" is not read as "S" + number.
    if (accept("Hol(")) return closed(GroupExpr{K::Holomorph, positive_param("Hol"), {}});
    if (accept("AGL1(")) return closed(GroupExpr{K::Agl1, prime_power_param("AGL1", false), {}});
    if (accept("GL2(")) return closed(GroupExpr{K::Gl2, prime_power_param("GL2", false), {}});
    if (accept("SL2(")) return closed(GroupExpr{K::Sl2, prime_power_param("SL2", false), {}});
    if (accept("UC(")) return closed(GroupExpr{K::Uc, prime_power_param("UC", true), {}});
    if (accept("Q8")) return GroupExpr{K::Quaternion8, 8, {}};
    if (accept("C")) return GroupExpr{K::Cyclic, positive_param("C"), {}};
    if (accept("D")) {
      const auto [m, at] = located_number();
      if (m < 2 || m % 2 != 0) invalid(at, "dihedral order must be even and at least 2, got " + std::to_string(m));
      return GroupExpr{K::Dihedral, m, {}};
    }
    if (accept("S")) {
      const auto [n, at] = located_number();
      if (n < 1 || n > 5) invalid(at, "symmetric degree must be in 1..5, got " + std::to_string(n));
      return GroupExpr{K::Symmetric, n, {}};
    }
    fail(kGroupAtoms);
  }

  GroupExpr closed(GroupExpr e) {
    expect(")");
    return e;
  }

  RingExpr ring_term() {
    using K = RingExpr::Kind;
    skip_ws();
    RingExpr e;
    if (accept("(")) {
      e = ring_expr();
      expect(")");
      return e;
    }
    if (accept("End(")) {
      e.kind = K::EndAb;
      do {
        const auto [d, at] = located_number();
        if (d < 2) invalid(at, "End needs cyclic orders of at least 2");
        e.params.push_back(d);
      } while (accept(","));
      expect(")");
      return e;
    }
    if (accept("TP(")) {
      e.kind = K::TruncPoly;
      e.subs.push_back(ring_expr());
      expect(",");
      e.n = positive_param("TP");
      expect(")");
      return e;
    }
    if (accept("GR(")) {
      e.kind = K::GroupRing;
      const auto [t, at] = located_number();
      if (t < 2) invalid(at, "GR needs a coefficient modulus of at least 2");
      e.n = t;
      expect(",");
      e.groups.push_back(group_expr());
      expect(")");
      return e;
    }
    if (accept("M(") || accept("U(")) {
      e.kind = text_[pos_ - 2] == 'M' ? K::Matrix : K::UpperTriangular;
      e.n = positive_param(e.kind == K::Matrix ? "M" : "U");
      expect(",");
      e.subs.push_back(ring_expr());
      expect(")");
      return e;
    }
    if (accept("Z")) {
      const auto [n, at] = located_number();
      if (n < 2) invalid(at, "Z needs a modulus of at least 2");
      e.kind = K::Zmod;
      e.n = n;
      return e;
    }
    if (accept("F")) {
      e.kind = K::Fq;
      e.n = prime_power_param("F", false);
      return e;
    }
    fail(kRingAtoms);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupExpr parse_group_expr(std::string_view text) {
  Parser p(text);
  GroupExpr e = p.group_expr();
  p.finish({"x"});
  return e;
}

RingExpr parse_ring_expr(std::string_view text) {
  Parser p(text);
  RingExpr e = p.ring_expr();
  p.finish({"x"});
  return e;
}

}  // namespace finalg
