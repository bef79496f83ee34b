#include "finalg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "finalg/error.hpp"
#include "finalg/finite_group.hpp"
#include "finalg/group_constructors.hpp"
#include "finalg/group_structure.hpp"
#include "finalg/isomorphism.hpp"
#include "finalg/parse.hpp"
#include "finalg/ring_analysis.hpp"
#include "finalg/verifier.hpp"

namespace finalg {

using nlohmann::json;

std::string catalog_name(const FiniteGroup& g) {
  if (!g.has_table()) return "";
  const std::uint64_t n = g.order();
  std::vector<std::string> names;
  if (is_cyclic(g)) names.push_back("C" + std::to_string(n));
  if (n % 2 == 0 && is_isomorphic(g, dihedral(n)).isomorphic) names.push_back("D" + std::to_string(n));
  auto try_named = [&](std::uint64_t order, const char* name, auto make) {
    if (n == order && is_isomorphic(g, make()).isomorphic) names.push_back(name);
  };
  try_named(8, "Q8", [] { return quaternion8(); });
  try_named(6, "S3", [] { return symmetric(3); });
  try_named(24, "S4", [] { return symmetric(4); });
  try_named(12, "A4", [] { return alternating(4); });
  try_named(48, "D8 x D6", [] { return direct_product(dihedral(8), dihedral(6)); });
  try_named(24, "SL2(3)", [] { return sl2(3).group; });
  // S3 reads better first: "S3 = D6".
  if (names.size() == 2 && names[1] == "S3") std::swap(names[0], names[1]);
  std::string out;
  for (const auto& s : names) out += (out.empty() ? "" : " = ") + s;
  return out;
}

namespace {

json spectrum_json(const std::map<std::uint64_t, std::uint64_t>& m) {
  json out = json::object();
  for (auto [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

std::string spectrum_text(const std::map<std::uint64_t, std::uint64_t>& m) {
  std::string s = "{";
  for (auto [k, v] : m) s += (s.size() > 1 ? ", " : "") + std::to_string(k) + ":" + std::to_string(v);
  return s + "}";
}

json group_summary(const FiniteGroup& g) {
  json j = {{"order", g.order()},
            {"catalog", catalog_name(g)},
            {"order_spectrum", spectrum_json(order_spectrum(g))},
            {"center_order", center(g).size()},
            {"abelianization_order", abelianization_order(g)}};
  return j;
}

std::string describe(const json& summary) {
  std::string s = "order " + std::to_string(summary["order"].get<std::uint64_t>());
  const std::string name = summary["catalog"];
  if (!name.empty()) return s + ", isomorphic to " + name;
  return s + ", order spectrum " + summary["order_spectrum"].dump() + ", center order " +
         std::to_string(summary["center_order"].get<std::uint64_t>()) + ", abelianization order " +
         std::to_string(summary["abelianization_order"].get<std::uint64_t>());
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

int run_units(const Command& cmd, std::ostream& out) {
  const RingExpr e = parse_ring_expr(cmd.args.at(0));
  const FiniteRing r = build_ring(e, cmd.bounds);
  const UnitGroupResult u = units(r, cmd.bounds);
  json summary = group_summary(u.group);
  std::vector<std::uint64_t> gens;
  for (Element g : generating_set(u.group)) gens.push_back(u.unit_elements[g]);
  summary["generators"] = gens;
  if (cmd.json) {
    out << json{{"ring", to_string(e)},
                {"ring_size", r.size()},
                {"characteristic", r.characteristic()},
                {"unit_group", summary},
                {"unit_elements", u.unit_elements}}
               .dump(2)
        << "\n";
  } else {
    out << "ring " << to_string(e) << ": " << r.size() << " elements, characteristic " << r.characteristic() << "\n"
        << "units: " << describe(summary) << "\n"
        << "generators (ring element indices): " << join(gens) << "\n";
  }
  return kExitOk;
}

int run_radical(const Command& cmd, std::ostream& out) {
  const RingExpr e = parse_ring_expr(cmd.args.at(0));
  const FiniteRing r = build_ring(e, cmd.bounds);
  const auto rad = jacobson_radical(r, cmd.bounds);
  if (cmd.json) {
    out << json{{"ring", to_string(e)}, {"ring_size", r.size()}, {"radical_size", rad.size()}, {"radical", rad}}.dump(2)
        << "\n";
  } else {
    out << "ring " << to_string(e) << ": " << r.size() << " elements\n"
        << "Jacobson radical: " << rad.size() << " elements" << (rad.size() == 1 ? " (semisimple)" : "") << "\n"
        << "elements: " << join(rad) << "\n";
  }
  return kExitOk;
}

int run_center(const Command& cmd, std::ostream& out) {
  const RingExpr e = parse_ring_expr(cmd.args.at(0));
  const FiniteRing r = build_ring(e, cmd.bounds);
  const auto z = center_ring(r, cmd.bounds);
  if (cmd.json) {
    out << json{{"ring", to_string(e)}, {"ring_size", r.size()}, {"center_size", z.size()}, {"center", z}}.dump(2)
        << "\n";
  } else {
    out << "ring " << to_string(e) << ": " << r.size() << " elements\n"
        << "center: " << z.size() << " elements" << (z.size() == r.size() ? " (commutative)" : "") << "\n"
        << "elements: " << join(z) << "\n";
  }
  return kExitOk;
}

int run_group_info(const Command& cmd, std::ostream& out) {
  const GroupExpr e = parse_group_expr(cmd.args.at(0));
  const FiniteGroup g = build_group(e, cmd.bounds);
  json summary = group_summary(g);
  summary["group"] = to_string(e);
  if (g.has_table()) {
    summary["conjugacy_classes"] = conjugacy_classes(g).size();
    std::vector<std::uint64_t> sizes;
    for (const auto& n : normal_subgroups(g)) sizes.push_back(n.size());
    summary["normal_subgroup_orders"] = sizes;
  }
  if (cmd.json) {
    out << summary.dump(2) << "\n";
    return kExitOk;
  }
  out << "group " << to_string(e) << ": " << describe(summary) << "\n"
      << "order spectrum: " << spectrum_text(order_spectrum(g)) << "\n"
      << "center order: " << summary["center_order"] << "\n"
      << "abelianization order: " << summary["abelianization_order"] << "\n";
  if (g.has_table()) {
    out << "conjugacy classes: " << summary["conjugacy_classes"] << "\n"
        << "normal subgroup orders: " << join(summary["normal_subgroup_orders"].get<std::vector<std::uint64_t>>())
        << "\n";
  }
  return kExitOk;
}

int run_iso(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (cmd.args.size() != 2) {
    err << "iso: expected two group expressions\n";
    return kExitUsage;
  }
  const GroupExpr a = parse_group_expr(cmd.args[0]), b = parse_group_expr(cmd.args[1]);
  const IsoResult r = is_isomorphic(build_group(a, cmd.bounds), build_group(b, cmd.bounds));
  if (cmd.json) {
    out << json{{"left", to_string(a)},
                {"right", to_string(b)},
                {"isomorphic", r.isomorphic},
                {"obstruction", r.obstruction},
                {"witness", r.witness}}
               .dump(2)
        << "\n";
  } else if (r.isomorphic) {
    out << to_string(a) << " is isomorphic to " << to_string(b) << " (witness verified on all pairs)\n";
  } else {
    out << to_string(a) << " is not isomorphic to " << to_string(b) << ": " << r.obstruction << " differs\n";
  }
  return kExitOk;
}

int run_verify(const Command& cmd, std::ostream& out) {
  std::vector<std::string> names;
  for (const auto& a : cmd.args) {
    if (a == "all") {
      names = check_names();
      break;
    }
    names.push_back(a);
  }
  if (names.empty()) names = check_names();
  for (const auto& n : names)
    if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
      throw BadParameter("unknown check '" + n + "'");
  VerifyOptions opt;
  opt.jobs = cmd.jobs;
  opt.bounds = cmd.bounds;
  const SuiteReport suite = run_suite(names, opt);
  if (cmd.json) {
    out << to_json(suite, cmd.timing).dump(2) << "\n";
  } else {
    for (const auto& c : suite.checks) {
      out << to_string(c.status) << "  " << c.check_name << "  " << c.cases_examined << "/" << c.cases_total
          << " cases";
      if (cmd.timing) out << "  " << static_cast<long long>(c.wall_time_ms) << " ms";
      out << "\n";
    }
    out << (suite.passed() ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return suite.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd.sub) {
      case Command::Sub::Units: return run_units(cmd, out);
      case Command::Sub::Radical: return run_radical(cmd, out);
      case Command::Sub::Center: return run_center(cmd, out);
      case Command::Sub::GroupInfo: return run_group_info(cmd, out);
      case Command::Sub::Iso: return run_iso(cmd, out, err);
      case Command::Sub::Verify: return run_verify(cmd, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeExceeded& e) {
    err << "size bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const BadParameter& e) {
    err << "bad parameter: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact finite group and ring computations"};
  app.fallthrough();
  app.require_subcommand(1);
  Command cmd;
  std::uint64_t bound = cmd.bounds.max_elements;
  app.add_flag("--json", cmd.json, "Emit JSON");
  app.add_option("--bound", bound, "Largest ring/group enumerated (default 1000000)")->check(CLI::PositiveNumber);
  app.add_option("--jobs", cmd.jobs, "Worker threads for verification (default 1)")->check(CLI::Range(1u, 256u));
  std::vector<std::string> checks;
  bool no_timing = false;

  std::string ring, group, left, right;
  std::vector<std::string> verify_args;
  auto* units_cmd = app.add_subcommand("units", "Unit group of a finite ring");
  units_cmd->add_option("ring", ring, "Ring expression, e.g. \"M(2,F2)\"")->required();
  auto* radical_cmd = app.add_subcommand("radical", "Jacobson radical of a finite ring");
  radical_cmd->add_option("ring", ring, "Ring expression")->required();
  auto* center_cmd = app.add_subcommand("center", "Center of a finite ring");
  center_cmd->add_option("ring", ring, "Ring expression")->required();
  auto* info_cmd = app.add_subcommand("group-info", "Structure summary of a group");
  info_cmd->add_option("group", group, "Group expression, e.g. \"Hol(12)\"")->required();
  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test");
  iso_cmd->add_option("left", left, "Group expression")->required();
  iso_cmd->add_option("right", right, "Group expression")->required();
  auto* verify_cmd = app.add_subcommand("verify", "Run verification checks (all by default)");
  verify_cmd->add_option("checks", verify_args, "Check names or \"all\"");
  verify_cmd->add_option("--check", checks, "Check to run (repeatable)");
  verify_cmd->add_flag("--no-timing", no_timing, "Omit wall times so output is reproducible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  cmd.bounds.max_elements = bound;
  cmd.timing = !no_timing;
  if (units_cmd->parsed()) cmd = Command{Command::Sub::Units, {ring}, cmd.json, cmd.timing, cmd.jobs, cmd.bounds};
  if (radical_cmd->parsed()) cmd = Command{Command::Sub::Radical, {ring}, cmd.json, cmd.timing, cmd.jobs, cmd.bounds};
  if (center_cmd->parsed()) cmd = Command{Command::Sub::Center, {ring}, cmd.json, cmd.timing, cmd.jobs, cmd.bounds};
  if (info_cmd->parsed()) cmd = Command{Command::Sub::GroupInfo, {group}, cmd.json, cmd.timing, cmd.jobs, cmd.bounds};
  if (iso_cmd->parsed()) cmd = Command{Command::Sub::Iso, {left, right}, cmd.json, cmd.timing, cmd.jobs, cmd.bounds};
  if (verify_cmd->parsed()) {
    verify_args.insert(verify_args.end(), checks.begin(), checks.end());
    cmd = Command{Command::Sub::Verify, verify_args, cmd.json, cmd.timing, cmd.jobs, cmd.bounds};
  }
  return run(cmd, out, err);
}

}  // namespace finalg
