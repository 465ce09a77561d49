#pragma once

// Command-line front end. run_cli takes the arguments after the program name
// and returns the exit status: 0 ok, 1 verification failure, 2 usage, parse
// or limit error.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "settle/settle.hpp"

namespace settle::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

namespace detail {

inline IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("range", "expected N or A..B, got '" + text + "'");
  }
}

inline std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string coord_string(Coord c) { return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")"; }

inline std::string table_text(const TableResult& t) {
  std::ostringstream os;
  os << "m\\n";
  for (int n = t.cols.first; n <= t.cols.last; ++n) os << std::setw(5) << n;
  os << "\n";
  for (int m = t.rows.first; m <= t.rows.last; ++m) {
    os << std::setw(3) << m;
    for (int n = t.cols.first; n <= t.cols.last; ++n) {
      const auto v = t.at(m, n);
      os << std::setw(5) << (v ? std::to_string(*v) : std::string("-"));
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Settlement grids: houses that need sunlight from the east, south or west."};
  app.name("settle");
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a pattern configuration");
  std::string gen_pattern;
  int gen_rows = 0, gen_cols = 0, gen_segments = 4;
  std::string gen_style = "plain", gen_out;
  bool gen_json = false;
  gen->add_option("--pattern", gen_pattern, "brick, comb, rake, stripe, rake-stripe, check or brick-comb")->required();
  gen->add_option("--rows", gen_rows)->required()->check(CLI::PositiveNumber);
  gen->add_option("--cols", gen_cols)->required()->check(CLI::PositiveNumber);
  gen->add_option("--segments", gen_segments, "segment limit for brick-comb")->check(CLI::PositiveNumber);
  gen->add_option("--style", gen_style, "plain, unicode or svg")->check(CLI::IsMember({"plain", "unicode", "svg"}));
  gen->add_option("-o,--output", gen_out, "write to a file instead of stdout");
  gen->add_flag("--json", gen_json);

  // check
  auto* check = app.add_subcommand("check", "Check a grid file for permissibility and maximality");
  std::string check_file, check_expect, check_boundary;
  bool check_json = false;
  check->add_option("file", check_file, "grid file, - for stdin")->required();
  check->add_option("--expect", check_expect, "fail unless the grid is permissible or maximal")
      ->check(CLI::IsMember({"permissible", "maximal"}));
  check->add_option("--boundary", check_boundary, "override the border from the file")
      ->check(CLI::IsMember({"free", "bricked"}));
  check->add_flag("--json", check_json);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Exact extremal occupancy");
  std::string solve_objective = "max", solve_boundary = "free", solve_witness;
  int solve_rows = 0, solve_cols = 0;
  bool solve_json = false, solve_stats = false, solve_brute = false, solve_show = false;
  solve_cmd->add_option("--objective", solve_objective)->check(CLI::IsMember({"max", "min"}));
  solve_cmd->add_option("--rows", solve_rows)->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--cols", solve_cols)->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--boundary", solve_boundary)->check(CLI::IsMember({"free", "bricked"}));
  solve_cmd->add_option("--witness", solve_witness, "write the witness grid to this file");
  solve_cmd->add_flag("--show", solve_show, "print the witness");
  solve_cmd->add_flag("--brute", solve_brute, "use exhaustive enumeration");
  solve_cmd->add_flag("--stats", solve_stats, "include search statistics");
  solve_cmd->add_flag("--json", solve_json);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Analytic bounds for one grid size");
  int bounds_rows = 0, bounds_cols = 0;
  bool bounds_json = false;
  bounds_cmd->add_option("--rows", bounds_rows)->required();
  bounds_cmd->add_option("--cols", bounds_cols)->required();
  bounds_cmd->add_flag("--json", bounds_json);

  // table
  auto* table_cmd = app.add_subcommand("table", "Exact optimum for a range of grid sizes");
  std::string table_objective = "max", table_boundary = "free", table_rows, table_cols, table_golden;
  bool table_json = false;
  table_cmd->add_option("--objective", table_objective)->check(CLI::IsMember({"max", "min"}));
  table_cmd->add_option("--rows", table_rows, "N or A..B")->required();
  table_cmd->add_option("--cols", table_cols, "N or A..B")->required();
  table_cmd->add_option("--boundary", table_boundary)->check(CLI::IsMember({"free", "bricked"}));
  table_cmd->add_option("--golden", table_golden, "compare with a stored table");
  table_cmd->add_flag("--json", table_json);

  // export-ip
  auto* export_cmd = app.add_subcommand("export-ip", "Write the integer program in LP format");
  std::string export_objective = "max", export_out;
  int export_rows = 0, export_cols = 0;
  export_cmd->add_option("--objective", export_objective)->check(CLI::IsMember({"max", "min"}));
  export_cmd->add_option("--rows", export_rows)->required();
  export_cmd->add_option("--cols", export_cols)->required();
  export_cmd->add_option("-o,--output", export_out);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare the dynamic programs with brute force");
  std::string oracle_objective = "both", oracle_boundary = "free";
  int oracle_rows = 0, oracle_cols = 0;
  bool oracle_json = false;
  oracle_cmd->add_option("--objective", oracle_objective)->check(CLI::IsMember({"max", "min", "both"}));
  oracle_cmd->add_option("--rows", oracle_rows)->required()->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--cols", oracle_cols)->required()->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--boundary", oracle_boundary)->check(CLI::IsMember({"free", "bricked"}));
  oracle_cmd->add_flag("--json", oracle_json);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "settle: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*gen) {
      Configuration c(Dims{1, 1});
      nlohmann::json extra;
      if (gen_pattern == "brick-comb") {
        auto best = brick_comb_best(gen_rows, gen_cols, gen_segments);
        c = best.config;
        extra["segments"] = to_string(best.spec);
      } else {
        const auto kind = parse_pattern_kind(gen_pattern);
        if (!kind) {
          err << "settle: unknown pattern '" << gen_pattern << "'\n";
          return exit_usage;
        }
        c = generate_pattern(*kind, gen_rows, gen_cols);
      }
      std::string text;
      if (gen_json) {
        auto j = to_json(c);
        j["pattern"] = gen_pattern;
        if (!extra.is_null()) j.update(extra);
        text = j.dump(2) + "\n";
      } else {
        const auto style = parse_render_style(gen_style);
        text = style == RenderStyle::ascii_plain ? to_grid_file(c) : render(c, style);
      }
      if (gen_out.empty()) out << text;
      else detail::write_file(gen_out, text);
      return exit_ok;
    }

    if (*check) {
      Configuration c = parse_grid(detail::read_all(check_file));
      if (!check_boundary.empty()) c = c.with_boundary(parse_boundary(check_boundary));
      const bool permissible = is_permissible(c);
      const bool maximal = permissible && is_maximal(c);
      const auto blocked = blocked_cells(c);

      nlohmann::json lots = nlohmann::json::array();
      std::ostringstream lot_text;
      for (int i = 1; i <= c.rows(); ++i)
        for (int j = 1; j <= c.cols(); ++j) {
          if (c.house(i, j)) continue;
          const Coord at{i, j};
          const bool e = proposition(c, at, Proposition::east);
          const bool w = proposition(c, at, Proposition::west);
          const bool nn = proposition(c, at, Proposition::north);
          const bool ce = proposition(c, at, Proposition::center);
          const bool add = is_addable(c, at);
          lots.push_back({{"i", i}, {"j", j}, {"east", e}, {"west", w}, {"north", nn}, {"center", ce},
                          {"addable", add}});
          lot_text << "  " << detail::coord_string(at) << (e ? " E" : "") << (w ? " W" : "") << (nn ? " N" : "")
                   << (ce ? " C" : "") << (add ? " addable" : "") << "\n";
        }

      if (check_json) {
        nlohmann::json b = nlohmann::json::array();
        for (auto at : blocked) b.push_back({at.i, at.j});
        out << nlohmann::json{{"schema", json_schema_version},
                              {"rows", c.rows()},
                              {"cols", c.cols()},
                              {"boundary", std::string(to_string(c.boundary()))},
                              {"occupancy", occupancy(c)},
                              {"density", rational_string(density(c))},
                              {"permissible", permissible},
                              {"maximal", maximal},
                              {"blocked", b},
                              {"empty_lots", lots}}
                   .dump(2)
            << "\n";
      } else {
        out << "grid " << c.rows() << "x" << c.cols() << " " << to_string(c.boundary()) << ", occupancy "
            << occupancy(c) << ", density " << rational_string(density(c)) << "\n";
        out << "permissible: " << detail::yes_no(permissible) << "\n";
        out << "maximal: " << detail::yes_no(maximal) << "\n";
        out << "blocked:";
        for (auto at : blocked) out << " " << detail::coord_string(at);
        out << "\n";
        out << "empty lots (E W N C = reasons, addable = could take a house):\n" << lot_text.str();
      }
      if (check_expect == "permissible" && !permissible) return exit_failed;
      if (check_expect == "maximal" && !maximal) return exit_failed;
      return exit_ok;
    }

    if (*solve_cmd) {
      SolveRequest req{Dims{solve_rows, solve_cols, parse_boundary(solve_boundary)}, parse_objective(solve_objective),
                       solve_show || !solve_witness.empty() || solve_json, {}};
      const SolveResult r = solve_brute ? brute_force(req) : solve(req);
      if (!solve_witness.empty()) detail::write_file(solve_witness, to_grid_file(*r.witness));
      if (solve_json) {
        nlohmann::json j{{"schema", json_schema_version},
                         {"objective", solve_objective},
                         {"rows", solve_rows},
                         {"cols", solve_cols},
                         {"boundary", solve_boundary},
                         {"method", solve_brute ? "brute-force" : "dynamic-programming"},
                         {"optimum", r.optimum},
                         {"witness", to_json(*r.witness)}};
        if (solve_stats)
          j["stats"] = {{"states", r.stats.states},
                        {"transitions", r.stats.transitions},
                        {"wall_seconds", r.stats.wall_seconds}};
        out << j.dump(2) << "\n";
      } else {
        out << "optimum " << r.optimum << "\n";
        if (solve_show) out << render(*r.witness);
        if (solve_stats)
          out << "states " << r.stats.states << "\ntransitions " << r.stats.transitions << "\nwall_seconds "
              << r.stats.wall_seconds << "\n";
      }
      return exit_ok;
    }

    if (*bounds_cmd) {
      const auto r = bounds_report(bounds_rows, bounds_cols);
      if (bounds_json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        auto line = [&](const std::string& name, const std::string& value, const char* source) {
          out << std::left << std::setw(20) << name << std::setw(10) << value << source << "\n";
        };
        out << "bounds for " << bounds_rows << "x" << bounds_cols << "\n";
        line("crude_lower", rational_string(r.crude_lower), BoundsReport::crude_source);
        line("i_lower", std::to_string(r.i_lower), BoundsReport::i_lower_source);
        line("e_upper_recurrence", std::to_string(r.e_upper_recurrence), BoundsReport::recurrence_source);
        line("e_upper_block", std::to_string(r.e_upper_block), BoundsReport::block_source);
        line("crude_upper", rational_string(r.crude_upper), BoundsReport::crude_source);
      }
      return exit_ok;
    }

    if (*table_cmd) {
      const auto t = table(parse_objective(table_objective), detail::parse_range(table_rows),
                           detail::parse_range(table_cols), parse_boundary(table_boundary));
      out << (table_json ? to_json(t).dump() + "\n" : detail::table_text(t));
      int status = exit_ok;
      for (int m = t.rows.first; m <= t.rows.last; ++m)
        for (int n = t.cols.first; n <= t.cols.last; ++n)
          if (!t.at(m, n)) {
            err << "settle: cell " << m << "x" << n << " unavailable: "
                << t.errors[m - t.rows.first][n - t.cols.first] << "\n";
            status = exit_usage;
          }
      if (!table_golden.empty()) {
        const auto golden = table_from_json(nlohmann::json::parse(detail::read_all(table_golden)));
        if (golden.objective != t.objective || golden.boundary != t.boundary)
          throw std::invalid_argument("golden table is for a different objective or border");
        int mismatches = 0;
        for (int m = t.rows.first; m <= t.rows.last; ++m)
          for (int n = t.cols.first; n <= t.cols.last; ++n) {
            if (m < golden.rows.first || m > golden.rows.last || n < golden.cols.first || n > golden.cols.last) {
              err << "settle: golden table has no cell " << m << "x" << n << "\n";
              ++mismatches;
              continue;
            }
            const auto want = golden.at(m, n);
            const auto got = t.at(m, n);
            if (want != got) {
              err << "settle: mismatch at " << m << "x" << n << ": golden "
                  << (want ? std::to_string(*want) : "-") << ", computed " << (got ? std::to_string(*got) : "-")
                  << "\n";
              ++mismatches;
            }
          }
        err << "golden comparison: " << mismatches << " mismatches\n";
        if (mismatches > 0) return exit_failed;
      }
      return status;
    }

    if (*export_cmd) {
      const auto model = export_objective == "max" ? export_efficient(export_rows, export_cols)
                                                   : export_inefficient(export_rows, export_cols);
      const auto text = to_lp(model);
      if (export_out.empty()) out << text;
      else detail::write_file(export_out, text);
      return exit_ok;
    }

    if (*oracle_cmd) {
      const Dims d{oracle_rows, oracle_cols, parse_boundary(oracle_boundary)};
      std::vector<Objective> objectives;
      if (oracle_objective != "min") objectives.push_back(Objective::max_permissible);
      if (oracle_objective != "max") objectives.push_back(Objective::min_maximal);
      bool agree = true;
      nlohmann::json results = nlohmann::json::array();
      for (auto o : objectives) {
        const SolveRequest req{d, o, true, {}};
        const auto dp = solve(req);
        const auto bf = brute_force(req);
        const bool same_value = dp.optimum == bf.optimum;
        const bool same_witness = *dp.witness == *bf.witness;
        agree = agree && same_value && same_witness;
        results.push_back({{"objective", std::string(to_string(o))},
                           {"dynamic_programming", dp.optimum},
                           {"brute_force", bf.optimum},
                           {"same_witness", same_witness}});
        if (!oracle_json)
          out << to_string(o) << ": dynamic programming " << dp.optimum << ", brute force " << bf.optimum
              << ", witnesses " << (same_witness ? "identical" : "differ") << "\n";
      }
      if (oracle_json)
        out << nlohmann::json{{"schema", json_schema_version}, {"agree", agree}, {"results", results}}.dump(2)
            << "\n";
      return agree ? exit_ok : exit_failed;
    }
  } catch (const parse_error& e) {
    err << "settle: parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const limit_error& e) {
    err << "settle: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "settle: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace settle::cli
