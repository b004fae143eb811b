#include "sudolyndon/cli.hpp"

#include "sudolyndon/errors.hpp"
#include "sudolyndon/generator.hpp"
#include "sudolyndon/hints.hpp"
#include "sudolyndon/interchange.hpp"
#include "sudolyndon/partial_word.hpp"
#include "sudolyndon/service.hpp"
#include "sudolyndon/solver.hpp"
#include "sudolyndon/text_format.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace sudolyndon::cli {

using nlohmann::json;

namespace {

class FileError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Puzzle load_puzzle(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_puzzle(text);
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), path + ": " + e.what(), e.line(), e.column());
  }
}

void print_grid(std::ostream& out, const std::vector<std::string>& rows) {
  for (const auto& r : rows) out << r << '\n';
}

void print_warnings(std::ostream& err, const Puzzle& p) {
  for (const auto& w : warnings(p)) err << "warning: " << w << '\n';
}

struct Common {
  bool json = false;
  bool strict = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "Emit the structured JSON interchange format");
  sub->add_flag("--strict", c.strict, "Exit 1 on negative puzzle results");
}

int cmd_solve(const std::string& file, std::size_t cap, bool all, const Common& c, std::ostream& out,
              std::ostream& err) {
  const Puzzle p = load_puzzle(file);
  print_warnings(err, p);
  SolveOptions options;
  options.cap = all ? kMaxSolutionCap : cap;
  const SolveResult r = solve(p, options);
  if (c.json) {
    json solutions = json::array();
    for (const Solution& s : r.solutions) solutions.push_back(solution_to_json(s));
    json stats = {{"nodes", r.stats.nodes},
                  {"lineFilterings", r.stats.line_filterings},
                  {"initialCandidates", r.stats.initial_candidates}};
    out << json{{"count", r.count}, {"truncated", r.truncated}, {"solutions", solutions}, {"stats", stats}}.dump(2)
        << '\n';
  } else {
    out << "solutions: " << r.count << (r.truncated ? "+ (cap reached)" : " (exact)") << '\n';
    for (std::size_t i = 0; i < r.solutions.size(); ++i) {
      out << "solution " << i + 1 << ":\n";
      print_grid(out, to_rows(r.solutions[i].grid));
    }
  }
  return c.strict && r.count == 0 ? kExitNegative : kExitOk;
}

int cmd_check(const std::string& file, const Common& c, std::ostream& out) {
  const Puzzle p = load_puzzle(file);
  const auto letters = to_letters(p.cells);
  if (!letters) {
    const std::size_t empty = p.cells.size() - p.clue_count();
    if (c.json)
      out << json{{"complete", false}, {"emptyCells", empty}}.dump(2) << '\n';
    else
      out << "grid is not fully assigned: " << empty << " cell(s) without a letter\n";
    return c.strict ? kExitUsage : kExitOk;
  }
  const GridReport report = check_grid(*letters, p);
  if (c.json) {
    json lines = json::array();
    for (const LineVerdict& v : report.lines) {
      json line = {{"kind", to_string(v.line.kind)}, {"index", v.line.index}, {"status", to_string(v.status)},
                   {"factorsOk", v.factors_ok}};
      if (v.count_ok) line["countOk"] = *v.count_ok;
      lines.push_back(line);
    }
    out << json{{"complete", true}, {"lines", lines}, {"pass", report.pass}}.dump(2) << '\n';
  } else {
    for (const LineVerdict& v : report.lines) {
      out << to_string(v.line) << ": ";
      std::string word;
      for (Letter l : extract_line(*letters, v.line, p.boxes)) word.push_back(to_char(l));
      out << word << ' '
          << (v.status == LineStatus::AltValid   ? "Lyndon over a<b"
              : v.status == LineStatus::BltValid ? "Lyndon over b<a"
                                                 : "not Lyndon");
      if (!v.factors_ok) out << ", contains a forbidden factor";
      if (v.count_ok && !*v.count_ok) out << ", wrong a-count";
      out << '\n';
    }
    out << "result: " << (report.pass ? "pass" : "fail") << '\n';
  }
  return c.strict && !report.pass ? kExitNegative : kExitOk;
}

int cmd_hint(const std::string& file, const std::string& board_file, const Common& c, std::ostream& out) {
  const Puzzle p = load_puzzle(file);
  CellGrid board = p.cells;
  if (!board_file.empty()) {
    const Puzzle b = load_puzzle(board_file);
    if (b.rows() != p.rows() || b.cols() != p.cols())
      throw ParseError(ParseErrorKind::Dimension, board_file + ": board dimensions differ from the puzzle");
    board = b.cells;
  }
  if (!consistent_with_clues(p, board)) throw PreconditionError("board contradicts the puzzle's clues");
  const HintResult result = next_hint(p, board);
  if (std::holds_alternative<Exhausted>(result)) {
    out << (c.json ? json{{"status", "exhausted"}}.dump(2) : "no further deduction (exhausted)") << '\n';
    return kExitOk;
  }
  if (const auto* k = std::get_if<Contradiction>(&result)) {
    if (c.json)
      out << json{{"status", "contradiction"},
                  {"line", {{"kind", to_string(k->line.kind)}, {"index", k->line.index}}},
                  {"explanation", k->explanation}}
                 .dump(2)
          << '\n';
    else
      out << "contradiction: " << k->explanation << '\n';
    return c.strict ? kExitNegative : kExitOk;
  }
  const Hint& h = std::get<Hint>(result);
  if (c.json) {
    json assignments = json::array();
    for (const auto& a : h.assignments)
      assignments.push_back({{"row", a.row}, {"col", a.col}, {"letter", std::string(1, to_char(a.letter))}});
    out << json{{"rule", rule_id(h.rule)},
                {"line", {{"kind", to_string(h.line.kind)}, {"index", h.line.index}}},
                {"assignments", assignments},
                {"explanation", h.explanation}}
               .dump(2)
        << '\n';
  } else {
    out << rule_id(h.rule) << " on " << to_string(h.line) << ":";
    for (const auto& a : h.assignments) out << " (" << a.row << "," << a.col << ")=" << to_char(a.letter);
    out << '\n' << h.explanation << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sudo-Lyndon puzzle engine: solve, check, hint, generate", "sudolyndon"};
  app.require_subcommand(1);

  Common common;
  std::string file, board_file, variant_name = "base", stars, host = "127.0.0.1";
  std::size_t cap = 2, rows = 0, cols = 0, box_rows = 0, box_cols = 0, p = 0, samples = 20;
  std::uint64_t seed = 0;
  int port = 8080;
  bool all = false, minimize = false, exhaustive = false;

  auto* solve_cmd = app.add_subcommand("solve", "Solve a puzzle file");
  solve_cmd->add_option("FILE", file, "Puzzle file")->required();
  solve_cmd->add_option("--cap", cap, "Maximum number of solutions to report")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--all", all, "Enumerate up to the absolute ceiling");
  add_common(solve_cmd, common);

  auto* check_cmd = app.add_subcommand("check", "Check a fully assigned grid");
  check_cmd->add_option("FILE", file, "Grid file")->required();
  add_common(check_cmd, common);

  auto* hint_cmd = app.add_subcommand("hint", "Next deduction for a puzzle");
  hint_cmd->add_option("FILE", file, "Puzzle file")->required();
  hint_cmd->add_option("--board", board_file, "Current board, in the puzzle file format");
  add_common(hint_cmd, common);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a uniquely solvable puzzle");
  gen_cmd->add_option("--rows", rows)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--cols", cols)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--variant", variant_name, "base|counts|countsPlusClues|boxes|boxesWild");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_flag("--minimize", minimize, "Verify the result is 1-minimal");
  gen_cmd->add_option("--box-rows", box_rows)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--box-cols", box_cols)->check(CLI::PositiveNumber);
  add_common(gen_cmd, common);

  auto* count_cmd = app.add_subcommand("count", "Count full valid grids");
  count_cmd->add_option("--rows", rows)->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--cols", cols)->required()->check(CLI::PositiveNumber);
  add_common(count_cmd, common);

  auto* fmin_cmd = app.add_subcommand("fmin", "Minimal clue count f(n, m)");
  fmin_cmd->add_option("--rows", rows)->required()->check(CLI::PositiveNumber);
  fmin_cmd->add_option("--cols", cols)->required()->check(CLI::PositiveNumber);
  fmin_cmd->add_flag("--exhaustive", exhaustive, "Exact value by exhaustive search");
  fmin_cmd->add_option("--samples", samples, "Generator runs in sampling mode")->check(CLI::PositiveNumber);
  fmin_cmd->add_option("--seed", seed);
  add_common(fmin_cmd, common);

  auto* family_cmd = app.add_subcommand("family", "One-dimensional minimal-clue family");
  family_cmd->add_option("--p", p)->required()->check(CLI::PositiveNumber);
  add_common(family_cmd, common);

  auto* scheme_cmd = app.add_subcommand("scheme", "Block-scheme full grid");
  scheme_cmd->add_option("--rows", rows)->required()->check(CLI::Range(2, 4096));
  scheme_cmd->add_option("--cols", cols)->required()->check(CLI::Range(2, 4096));
  scheme_cmd->add_option("--stars", stars, "Free-cell letters, row-major, over {a,b} or {0,1}");
  add_common(scheme_cmd, common);

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--port", port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", host);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(file, cap, all, common, out, err);
    if (*check_cmd) return cmd_check(file, common, out);
    if (*hint_cmd) return cmd_hint(file, board_file, common, out);
    if (*gen_cmd) {
      GenConfig config;
      config.rows = rows;
      config.cols = cols;
      auto v = variant_from_string(variant_name);
      if (!v) {
        err << "error: unknown variant \"" << variant_name << "\"\n";
        return kExitUsage;
      }
      config.variant = *v;
      config.seed = seed;
      config.minimize = minimize;
      if (box_rows || box_cols) config.boxes = BoxDims{box_rows, box_cols};
      const Generated g = generate(config);
      if (common.json)
        out << json{{"puzzle", puzzle_to_json(g.puzzle)}, {"solution", solution_to_json(g.solution)}}.dump(2)
            << '\n';
      else
        out << render_puzzle(g.puzzle);
      return kExitOk;
    }
    if (*count_cmd) {
      const std::uint64_t n = count_full_grids(rows, cols);
      if (common.json) out << json{{"n", rows}, {"m", cols}, {"count", n}}.dump(2) << '\n';
      else out << n << '\n';
      return kExitOk;
    }
    if (*fmin_cmd) {
      const FminResult r = exhaustive ? f_min_exhaustive(rows, cols) : f_min_sampled(rows, cols, samples, seed);
      if (common.json)
        out << json{{"n", rows}, {"m", cols}, {"value", r.value}, {"exact", r.exact}, {"lowerBound", r.lower_bound}}
                   .dump(2)
            << '\n';
      else if (r.exact)
        out << "f(" << rows << "," << cols << ") = " << r.value << '\n';
      else
        out << r.lower_bound << " <= f(" << rows << "," << cols << ") <= " << r.value << " (sampled, " << samples
            << " runs)\n";
      return kExitOk;
    }
    if (*family_cmd) {
      const PartialWord pw = family_partial_word(p);
      const Word w = family_solution(p);
      if (common.json)
        out << json{{"p", p}, {"partialWord", pw.str()}, {"solution", w.str()}, {"length", pw.size()},
                    {"knownLetters", pw.known_count()}}
                   .dump(2)
            << '\n';
      else
        out << pw.str() << '\n' << w.str() << '\n';
      return kExitOk;
    }
    if (*scheme_cmd) {
      std::vector<Letter> letters;
      for (char ch : stars) {
        if (ch == 'a' || ch == '0') letters.push_back(Letter::A);
        else if (ch == 'b' || ch == '1') letters.push_back(Letter::B);
        else {
          err << "error: --stars accepts only a, b, 0, 1\n";
          return kExitUsage;
        }
      }
      const LetterGrid g = scheme_grid(rows, cols, letters);
      Puzzle base;
      base.cells = to_cells(g);
      const bool pass = check_grid(g, base).pass;
      if (common.json)
        out << json{{"cells", grid_to_json(g)}, {"pass", pass}}.dump(2) << '\n';
      else {
        print_grid(out, to_rows(g));
        out << "check: " << (pass ? "pass" : "fail") << '\n';
      }
      return common.strict && !pass ? kExitNegative : kExitOk;
    }
    if (*serve_cmd) {
      service::PuzzleService svc;
      err << "listening on http://" << host << ':' << port << "/api/v1\n";
      if (!service::serve(svc, host, port)) {
        err << "error: cannot bind " << host << ':' << port << '\n';
        return kExitNegative;
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sudolyndon::cli
