#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "finalg/cli.hpp"
#include "finalg/error.hpp"
#include "finalg/group_constructors.hpp"
#include "finalg/parse.hpp"

using namespace finalg;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<const char*> args) {
  args.insert(args.begin(), "finalg");
  std::ostringstream out, err;
  const int code = run_cli(int(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

ParseError group_error(const char* text) {
  try {
    parse_group_expr(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for " << text);
  return ParseError("", 0, {});
}

}  // namespace

TEST_CASE("group expressions") {
  using K = GroupExpr::Kind;
  const GroupExpr d = parse_group_expr("D8 x D6");
  CHECK(d.kind == K::Product);
  REQUIRE(d.factors.size() == 2);
  CHECK(d.factors[0].kind == K::Dihedral);
  CHECK(d.factors[0].n == 8);
  CHECK(parse_group_expr("Hol(12)").kind == K::Holomorph);
  CHECK(parse_group_expr("SL2(3)").kind == K::Sl2);
  CHECK(parse_group_expr("S3").kind == K::Symmetric);
  CHECK(parse_group_expr("  C2 X C3 x C5 ").factors.size() == 3);
  CHECK(parse_group_expr("Q8").kind == K::Quaternion8);
  CHECK(parse_group_expr("UC(7)").kind == K::Uc);
}

TEST_CASE("expressions round trip through text") {
  for (const char* text : {"D8 x D6", "Hol(12)", "C2 x Q8", "SL2(3)", "GL2(4)", "AGL1(5)", "UC(9)", "S4", "C1",
                           "C2 x (D8 x S3)"}) {
    INFO(text);
    const GroupExpr e = parse_group_expr(text);
    CHECK(to_string(e) == text);
    CHECK(parse_group_expr(to_string(e)) == e);
  }
  for (const char* text : {"Z4", "F9", "M(2,F2)", "U(3,F2)", "TP(F3,2)", "GR(2,D6)", "End(4,2)", "Z4 x M(2,F2)",
                           "GR(4,SL2(3))", "M(2,Z4) x F2"}) {
    INFO(text);
    const RingExpr e = parse_ring_expr(text);
    CHECK(to_string(e) == text);
    CHECK(parse_ring_expr(to_string(e)) == e);
  }
}

TEST_CASE("parse errors report position and expectations") {
  const ParseError d7 = group_error("D7");
  CHECK(d7.position() == 1);
  CHECK(std::string(d7.what()).find("even") != std::string::npos);
  const ParseError trailing = group_error("C4 y");
  CHECK(trailing.position() == 3);
  CHECK(std::find(trailing.expected().begin(), trailing.expected().end(), "end of input") != trailing.expected().end());
  const ParseError open = group_error("Hol(12");
  CHECK(open.position() == 6);
  CHECK(group_error("").position() == 0);
  CHECK(group_error("S6").position() == 1);
  CHECK(group_error("SL2(6)").position() == 4);
  CHECK(group_error("UC(8)").position() == 3);
  CHECK_THROWS_AS(parse_ring_expr("Z1"), ParseError);
  CHECK_THROWS_AS(parse_ring_expr("F6"), ParseError);
  CHECK_THROWS_AS(parse_ring_expr("M(2,F2"), ParseError);
  CHECK_THROWS_AS(parse_ring_expr("GR(1,C2)"), ParseError);
  CHECK_THROWS_AS(parse_ring_expr("End(4,1)"), ParseError);
}

TEST_CASE("catalog names") {
  CHECK(catalog_name(symmetric(3)) == "S3 = D6");
  CHECK(catalog_name(quaternion8()) == "Q8");
  CHECK(catalog_name(cyclic(6)).find("C6") != std::string::npos);
}

TEST_CASE("units subcommand") {
  const Run r = cli({"units", "M(2,F2)"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("order 6, isomorphic to S3 = D6") != std::string::npos);
  CHECK(r.out.find("16 elements, characteristic 2") != std::string::npos);
  const Run j = cli({"--json", "units", "TP(F3,2)"});
  REQUIRE(j.code == kExitOk);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("ring_size") == 9);
  CHECK(doc.at("unit_group").at("order") == 6);
  CHECK(doc.at("unit_elements").size() == 6);
}

TEST_CASE("other subcommands") {
  CHECK(cli({"radical", "Z4"}).out.find("2 elements") != std::string::npos);
  CHECK(cli({"center", "M(2,F3)"}).out.find("center: 3 elements") != std::string::npos);
  const Run info = cli({"group-info", "Hol(12)"});
  CHECK(info.code == kExitOk);
  CHECK(info.out.find("order 48") != std::string::npos);
  const Run yes = cli({"iso", "Hol(4)", "D8"});
  CHECK(yes.code == kExitOk);
  CHECK(yes.out.find("is isomorphic") != std::string::npos);
  const Run no = cli({"iso", "Q8", "D8"});
  CHECK(no.code == kExitOk);
  CHECK(no.out.find("not isomorphic") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli({"units", "GR(2, SL2(3))"}).code == kExitBound);
  CHECK(cli({"--bound", "10", "units", "M(2,F2)"}).code == kExitBound);
  CHECK(cli({"units", "D7"}).code == kExitUsage);
  CHECK(cli({"group-info", "D7"}).err.find("position 1") != std::string::npos);
  CHECK(cli({"--frobnicate"}).code == kExitUsage);
  CHECK(cli({"verify", "no_such_check"}).code == kExitUsage);
  CHECK(cli({"units"}).code == kExitUsage);
  CHECK(cli({"--jobs", "0", "verify"}).code == kExitUsage);
}

TEST_CASE("verify subcommand") {
  const Run all = cli({"verify", "all", "--json", "--no-timing"});
  CHECK(all.code == kExitOk);
  const auto doc = nlohmann::json::parse(all.out);
  CHECK(doc.at("status") == "pass");
  CHECK(doc.at("checks").size() == 11);
  CHECK(doc.at("checks")[0].contains("wall_time_ms") == false);
  CHECK(cli({"verify", "all", "--json", "--no-timing"}).out == all.out);
  const Run some = cli({"verify", "--check", "hurwitz", "--check", "agl1_remark"});
  CHECK(some.code == kExitOk);
  CHECK(some.out.find("all checks passed") != std::string::npos);
  CHECK(some.out.find("sl23_char2") == std::string::npos);
}
