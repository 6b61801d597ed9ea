#pragma once

// fpkit command line front end. `run` is the whole program minus process
// plumbing so tests can drive it directly.

#include "fpkit/classifier.hpp"
#include "fpkit/fixed_point_data.hpp"
#include "fpkit/genus_engine.hpp"
#include "fpkit/identity_suite.hpp"
#include "fpkit/multigraph.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fpkit::cli {

struct CommandResult {
  int exit_code = 0;  // 0 success, 1 data failed checks, 2 usage or I/O error
  std::string out;
  std::string err;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

inline std::string point_text(const FixedPointData& d) {
  std::string s;
  for (const auto& p : d.points) {
    std::vector<std::int64_t> w(p.weights.begin(), p.weights.end());
    s += (s.empty() ? "" : "; ") + p.id + ":" + symbol(p.sign) + "{" + join(w) + "}";
  }
  return s;
}

inline std::string checks_text(const std::vector<CheckOutcome>& outcomes) {
  std::ostringstream os;
  for (const auto& c : outcomes) {
    os << std::left << std::setw(22) << c.name << (c.passed ? "pass" : "FAIL");
    if (!c.passed) os << "  " << c.witness.dump();
    os << "\n";
  }
  os << "verdict: " << (all_passed(outcomes) ? "pass" : "fail") << "\n";
  return os.str();
}

inline std::string genus_text(const GenusEvaluation& g) {
  std::ostringstream os;
  os << "chi_y     = " << chi_y_string(g.report.chi) << "\n";
  os << "chi       = " << join(g.report.chi) << "\n";
  os << "N         = " << join(g.report.N) << "\n";
  os << "Todd      = " << g.report.todd << "\n";
  os << "T_xy      = " << join(g.report.txy) << "\n";
  os << "constant  = " << (g.report.symbolic_constant ? "yes" : "no") << "\n";
  os << "routes    = " << (g.routes_agree ? "agree" : "DISAGREE") << "\n";
  for (std::size_t i = 0; i < g.symbolic.size(); ++i)
    os << "chi^" << i << " sum = " << g.symbolic[i].value.to_string() << "\n";
  return os.str();
}

inline std::string graph_text(const SignedMultigraph& g) {
  std::ostringstream os;
  for (const auto& v : g.vertices) os << "vertex " << v.id << " " << symbol(v.sign) << "\n";
  for (const auto& e : g.edges) os << "edge   " << e.from << " -> " << e.to << "  label " << e.label << "\n";
  return os.str();
}

inline std::string census_text(const Census& c) {
  std::ostringstream os;
  os << "bounds: points=" << c.bounds.points << " dim=" << 2 * c.bounds.n << " max-weight=" << c.bounds.max_weight
     << "\n";
  os << "candidates: " << c.candidates << "\n";
  for (const auto& [name, count] : c.rejected) os << "  rejected by " << std::left << std::setw(20) << name << count << "\n";
  os << "survivors: " << c.survivors.size() << "\n";
  for (const auto& [name, count] : c.trichotomy) os << "  " << std::left << std::setw(22) << name << count << "\n";
  os << "flagged: " << c.flagged.size() << "\n";
  for (const auto& d : c.flagged) os << "  " << point_text(d) << "\n";
  return os.str();
}

inline json balance_failure(const BalanceError& e) { return json{{"error", e.what()}, {"witness", e.witness()}}; }

}  // namespace detail

inline CommandResult run(const std::vector<std::string>& args) {
  using namespace detail;
  CommandResult result;

  CLI::App app{"fpkit: fixed point data of circle actions on unitary manifolds", "fpkit"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string file;
  bool strict = false;
  std::string graph_path;
  auto* validate = app.add_subcommand("validate", "Run every consistency check on a data file");
  validate->add_option("file", file, "Fixed point data (JSON)")->required();
  validate->add_flag("--strict", strict, "Also require genus constancy and congruent isotropy partitions");
  validate->add_option("--graph", graph_path, "Graph JSON that must describe the data");

  std::optional<std::size_t> series_order;
  auto* genus = app.add_subcommand("genus", "chi_y genus by counting and by the exact symbolic sum");
  genus->add_option("file", file)->required();
  genus->add_option("--series-order", series_order, "Truncation order of the series expansion");

  std::string dot_path;
  bool relaxed = false;
  auto* graph = app.add_subcommand("graph", "Build a signed multigraph describing the data");
  graph->add_option("file", file)->required();
  graph->add_option("--dot", dot_path, "Also write Graphviz DOT here");
  graph->add_flag("--relaxed", relaxed, "Fall back to a global matching when a level does not balance");

  Weight modulus = 1;
  auto* subgraph = app.add_subcommand("subgraph", "Sub-multigraph of edges with labels divisible by a modulus");
  subgraph->add_option("file", file)->required();
  subgraph->add_option("--modulus", modulus)->required()->check(CLI::PositiveNumber);
  subgraph->add_option("--dot", dot_path);
  subgraph->add_flag("--relaxed", relaxed);

  int power = 0;
  auto* abbv = app.add_subcommand("abbv", "Localization sum of c_1^J");
  abbv->add_option("file", file)->required();
  abbv->add_option("--power", power)->required()->check(CLI::NonNegativeNumber);

  int points = 0, dim = 0;
  Weight max_weight = 0;
  std::string out_path;
  auto* classify = app.add_subcommand("classify", "Enumerate and filter candidate data");
  classify->add_option("--points", points)->required()->check(CLI::PositiveNumber);
  classify->add_option("--dim", dim)->required()->check(CLI::PositiveNumber);
  classify->add_option("--max-weight", max_weight)->required()->check(CLI::PositiveNumber);
  classify->add_option("--out", out_path, "Also write the census JSON here");

  std::uint64_t seed = 0;
  auto* random = app.add_subcommand("random", "Seeded data induced from a random regular signed multigraph");
  random->add_option("--seed", seed)->required();
  random->add_option("--points", points)->required()->check(CLI::PositiveNumber);
  random->add_option("--dim", dim)->required()->check(CLI::PositiveNumber);
  random->add_option("--max-label", max_weight)->required()->check(CLI::PositiveNumber);

  auto* report = app.add_subcommand("report", "Validation, genus, graph and localization sums in one bundle");
  report->add_option("file", file)->required();
  report->add_flag("--strict", strict);

  std::vector<const char*> argv{"fpkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string(e.what()) + "\n" + app.help();
    return result;
  }
  const bool text = format == "text";

  try {
    if (dim % 2 != 0) throw CLI::ValidationError("--dim", "dimension must be a positive even integer");

    if (validate->parsed()) {
      const FixedPointData data = parse_data(read_file(file));
      auto outcomes = validate_all(data, strict);
      if (!graph_path.empty()) {
        const auto g = graph_from_json(json::parse(read_file(graph_path)));
        const auto parts = effective_partitions(data);
        auto d = describes(g, data, &parts);
        outcomes.push_back(d.holds ? CheckOutcome::pass("describes") : CheckOutcome::fail("describes", d.witness));
      }
      result.out = text ? checks_text(outcomes) : dump(to_json(outcomes));
      result.exit_code = all_passed(outcomes) ? 0 : 1;
    } else if (genus->parsed()) {
      const FixedPointData data = parse_data(read_file(file));
      const auto g = evaluate_genus(data, series_order);
      json j = to_json(g);
      j["semifree"] = is_semifree(data) ? to_json(semifree_report(data)) : json(nullptr);
      result.out = text ? genus_text(g) : dump(j);
    } else if (graph->parsed() || subgraph->parsed()) {
      const FixedPointData data = parse_data(read_file(file));
      const auto mode = relaxed ? MatchingMode::relaxed : MatchingMode::per_index;
      try {
        auto g = build_multigraph(data, {}, mode);
        if (subgraph->parsed()) g = sub_multigraph(g, modulus);
        if (!dot_path.empty()) write_file(dot_path, export_dot(g));
        result.out = text ? graph_text(g) : dump(to_json(g));
      } catch (const BalanceError& e) {
        result.out = dump(balance_failure(e));
        result.exit_code = 1;
      }
    } else if (abbv->parsed()) {
      const FixedPointData data = parse_data(read_file(file));
      const auto v = abbv_c1_power(data, power);
      result.out = text ? "int c_1^" + std::to_string(power) + " = " + to_string(v.value) + "\n"
                        : dump(json{{"power", v.power}, {"value", to_string(v.value)}});
    } else if (classify->parsed()) {
      const Census c = survey({points, dim / 2, max_weight});
      const std::string census = dump(to_json(c));
      if (!out_path.empty()) write_file(out_path, census);
      result.out = text ? census_text(c) : census;
    } else if (random->parsed()) {
      result.out = serialize_data(random_graph_data(seed, points, dim / 2, max_weight));
    } else if (report->parsed()) {
      const FixedPointData data = parse_data(read_file(file));
      json j;
      j["data"] = to_json(data);
      const auto outcomes = validate_all(data, strict);
      j["validation"] = to_json(outcomes);
      j["verdict"] = all_passed(outcomes);
      json g = to_json(evaluate_genus(data));
      g["semifree"] = is_semifree(data) ? to_json(semifree_report(data)) : json(nullptr);
      j["genus"] = std::move(g);
      json sums = json::array();
      for (int p = 0; p <= data.half_dimension; ++p) sums.push_back(to_string(abbv_c1_power(data, p).value));
      j["abbv"] = std::move(sums);
      j["chern_map"] = to_json(chern_map_analysis(data));
      try {
        const auto graph_built = build_multigraph(data);
        j["graph"] = to_json(graph_built);
        j["dot"] = export_dot(graph_built);
      } catch (const BalanceError& e) {
        j["graph"] = balance_failure(e);
      }
      j["trichotomy"] = data.points.size() == 2 ? to_json(trichotomy_match(data)) : json(nullptr);
      result.out = dump(j);
      result.exit_code = all_passed(outcomes) ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    result.exit_code = 2;
    result.err = std::string(e.what()) + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace fpkit::cli
