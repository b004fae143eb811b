#include "oracles.hpp"

#include "sudolyndon/errors.hpp"
#include "sudolyndon/grid.hpp"
#include "sudolyndon/interchange.hpp"
#include "sudolyndon/text_format.hpp"

#include <doctest.h>

#include <random>

using namespace sudolyndon;

namespace {

LetterGrid letters(const std::vector<std::string>& rows) { return *to_letters(cell_grid_from_rows(rows)); }

std::string word(const std::vector<Letter>& w) { return oracle::str(w); }

ParseError parse_error(const std::string& text) {
  try {
    parse_puzzle(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  throw;
}

const std::vector<std::string> kSolution = {"aabb", "aabb", "bbaa", "bbaa"};

LetterGrid random_grid(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  LetterGrid g(n, m, Letter::A);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = rng() & 1 ? Letter::B : Letter::A;
  return g;
}

}  // namespace

TEST_CASE("the 4x4 figure parses with four clues") {
  const Puzzle p = oracle::fixture("example_4x4.sl");
  CHECK(p.rows() == 4);
  CHECK(p.cols() == 4);
  CHECK(p.clue_count() == 4);
  CHECK(p.variant == Variant::Base);
  CHECK(p.cells(1, 1) == Cell::A);
  CHECK(p.cells(1, 2) == Cell::B);
  CHECK(p.cells(2, 1) == Cell::B);
  CHECK(p.cells(2, 2) == Cell::A);
}

TEST_CASE("variant files infer their variant") {
  const Puzzle v1 = oracle::fixture("variant1.sl");
  CHECK(v1.variant == Variant::Counts);
  CHECK(*v1.row_acounts == std::vector<int>{2, 2, 4, 2, 5, 4});
  CHECK(*v1.col_acounts == std::vector<int>{4, 5, 3, 3, 2, 2});
  CHECK(oracle::fixture("variant2.sl").variant == Variant::CountsPlusClues);
  CHECK(oracle::fixture("variant3.sl").variant == Variant::Boxes);
  CHECK(oracle::fixture("variant4.sl").variant == Variant::BoxesWild);
  const Puzzle f = oracle::fixture("forbid_aaa_bbb.sl");
  CHECK(f.forbidden_factors.size() == 2);
  CHECK(f.rows() == 9);
}

TEST_CASE("parse errors carry kinds and locations") {
  auto e = parse_error("sudolyndon 1\nsize 6 6\ngrid\n......\n.....\n......\n......\n......\n......\n");
  CHECK(e.kind() == ParseErrorKind::Dimension);
  CHECK(e.line() == 5);

  e = parse_error("sudolyndon 2\nsize 1 1\ngrid\na\n");
  CHECK(e.kind() == ParseErrorKind::Header);
  CHECK(e.line() == 1);

  e = parse_error("sudolyndon 1\nsize 2 2\ngrid\nab\nxa\n");
  CHECK(e.kind() == ParseErrorKind::IllegalCharacter);
  CHECK(e.line() == 5);
  CHECK(e.column() == 1);

  e = parse_error("sudolyndon 1\nsize 2 2\nrowcounts 1 3\ngrid\n..\n..\n");
  CHECK(e.kind() == ParseErrorKind::CountOutOfRange);
  CHECK(e.line() == 3);
  CHECK(e.column() == 13);

  e = parse_error("sudolyndon 1\nsize 4 4\nboxes 3 2\ngrid\n....\n....\n....\n....\n");
  CHECK(e.kind() == ParseErrorKind::BoxTiling);

  e = parse_error("sudolyndon 1\nsize 2 2\ngrid\n.*\n..\n");
  CHECK(e.kind() == ParseErrorKind::WildcardOutsideVariant);
  CHECK(e.line() == 4);
  CHECK(e.column() == 2);

  e = parse_error("sudolyndon 1\nsize 2 2\nrowcounts 1 1\ncolcounts 2 1\ngrid\n..\n..\n");
  CHECK(e.kind() == ParseErrorKind::CountMismatch);

  e = parse_error("sudolyndon 1\nsize 2 2\ncolour red\ngrid\n..\n..\n");
  CHECK(e.kind() == ParseErrorKind::Syntax);
  CHECK(e.line() == 3);

  e = parse_error("sudolyndon 1\nsize 2 2\ngrid\n..\n..\n..\n");
  CHECK(e.kind() == ParseErrorKind::Dimension);
  CHECK(e.line() == 6);
}

TEST_CASE("render normalizes and round-trips") {
  const std::string messy =
      "# the 4x4 example\nsudolyndon   1\n\nsize 4\t4\nforbid  aaa   bbb\nrowcounts 2 2 2 2\ngrid\n....\n.ab.\n.ba.\n....\n\n\n";
  const Puzzle p = parse_puzzle(messy);
  const std::string canonical = render_puzzle(p);
  CHECK(canonical ==
        "sudolyndon 1\nsize 4 4\nrowcounts 2 2 2 2\nforbid aaa bbb\ngrid\n....\n.ab.\n.ba.\n....\n");
  CHECK(parse_puzzle(canonical) == p);
  CHECK(render_puzzle(parse_puzzle(canonical)) == canonical);
  for (const char* name : {"example_4x4.sl", "puzzle1.sl", "puzzle2.sl", "nosolution.sl", "variant1.sl",
                           "variant2.sl", "variant3.sl", "variant4.sl", "forbid_aaa_bbb.sl", "rule2_row.sl"}) {
    const std::string text = oracle::fixture_text(name);
    CHECK_MESSAGE(render_puzzle(parse_puzzle(text)) == text, name);
  }
}

TEST_CASE("JSON interchange round-trips and validates") {
  for (const char* name : {"example_4x4.sl", "variant1.sl", "variant2.sl", "variant4.sl", "forbid_aaa_bbb.sl"}) {
    const Puzzle p = oracle::fixture(name);
    const auto j = puzzle_to_json(p);
    for (const char* key : {"n", "m", "cells", "variant", "rowACounts", "colACounts", "boxRows", "boxCols",
                            "forbiddenFactors"})
      CHECK(j.contains(key));
    CHECK(puzzle_from_json(nlohmann::json::parse(j.dump())) == p);
  }
  auto j = puzzle_to_json(oracle::fixture("example_4x4.sl"));
  j["cells"][1] = "abc.";
  CHECK_THROWS_AS(puzzle_from_json(j), ParseError);
  j = puzzle_to_json(oracle::fixture("example_4x4.sl"));
  j["cells"][1] = ".*..";
  CHECK_THROWS_AS(puzzle_from_json(j), ParseError);
  j = puzzle_to_json(oracle::fixture("example_4x4.sl"));
  j["variant"] = "boxes";
  CHECK_THROWS_AS(puzzle_from_json(j), ParseError);
  j.erase("variant");
  CHECK(puzzle_from_json(j).variant == Variant::Base);
}

TEST_CASE("extract_line reads rows, columns and boxes in order") {
  const LetterGrid g = letters(kSolution);
  CHECK(word(extract_line(g, {LineKind::Row, 2})) == "bbaa");
  CHECK(word(extract_line(g, {LineKind::Col, 0})) == "aabb");
  const LetterGrid small = letters({"aa", "bb"});
  CHECK(word(extract_line(small, {LineKind::Box, 0}, BoxDims{2, 2})) == "aabb");
  const LetterGrid wide = letters({"abab", "bbaa"});
  CHECK(word(extract_line(wide, {LineKind::Box, 1}, BoxDims{2, 2})) == "abaa");
  CHECK(all_lines(6, 6, BoxDims{3, 3}).size() == 16);
}

TEST_CASE("check_grid examples") {
  const Puzzle p = oracle::fixture("example_4x4.sl");
  const auto report = check_grid(letters(kSolution), p);
  CHECK(report.pass);
  CHECK(report.lines.size() == 8);
  for (const auto& v : report.lines) CHECK(v.status != LineStatus::Invalid);
  CHECK(report.lines[0].status == LineStatus::AltValid);
  CHECK(report.lines[2].status == LineStatus::BltValid);

  Puzzle base;
  base.cells = CellGrid(3, 3, Cell::Hole);
  const auto all_a = check_grid(LetterGrid(3, 3, Letter::A), base);
  CHECK_FALSE(all_a.pass);
  for (const auto& v : all_a.lines) CHECK(v.status == LineStatus::Invalid);

  Puzzle counts = p;
  counts.row_acounts = std::vector<int>{2, 2, 2, 2};
  counts.col_acounts = std::vector<int>{2, 2, 2, 2};
  CHECK(check_grid(letters(kSolution), counts).pass);
  counts.row_acounts = std::vector<int>{3, 2, 2, 1};
  const auto bad = check_grid(letters(kSolution), counts);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.counts_ok);
  CHECK(bad.lyndon_ok);

  Puzzle forbid = p;
  forbid.forbidden_factors = {Word::parse("aa")};
  CHECK_FALSE(check_grid(letters(kSolution), forbid).factors_ok);
}

TEST_CASE("check_grid agrees with the Lyndon definition on random grids") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 1 + rng() % 6, m = 1 + rng() % 6;
    const LetterGrid g = random_grid(rng, n, m);
    Puzzle p;
    p.cells = CellGrid(n, m, Cell::Hole);
    bool expected = true;
    for (const LineRef& ref : all_lines(n, m))
      expected &= oracle::is_lyndon_any(extract_line(g, ref));
    REQUIRE(check_grid(g, p).pass == expected);
  }
}

TEST_CASE("check_grid is invariant under transpose and letter swap") {
  std::mt19937_64 rng(4);
  int passing = 0;
  for (int t = 0; t < 20000; ++t) {
    const std::size_t n = 2 + rng() % 3, m = 2 + rng() % 3;
    const LetterGrid g = random_grid(rng, n, m);
    Puzzle p;
    p.cells = CellGrid(n, m, Cell::Hole);
    if (rng() & 1) {
      std::vector<int> rows(n), cols(m);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c)
          if (g(r, c) == Letter::A) ++rows[r], ++cols[c];
      if (rng() & 1) rows[0] = static_cast<int>(rng() % (m + 1));
      p.row_acounts = rows;
      p.col_acounts = cols;
    }
    const bool pass = check_grid(g, p).pass;
    passing += pass;
    REQUIRE(check_grid(transposed(g), transposed(p)).pass == pass);
    REQUIRE(check_grid(swapped(g), swapped(p)).pass == pass);
  }
  CHECK(passing > 0);
}

TEST_CASE("clue consistency and warnings") {
  const Puzzle p = oracle::fixture("example_4x4.sl");
  CHECK(consistent_with_clues(p, p.cells));
  CHECK(consistent_with_clues(p, to_cells(letters(kSolution))));
  CellGrid bad = p.cells;
  bad(1, 1) = Cell::B;
  CHECK_FALSE(consistent_with_clues(p, bad));
  CHECK(warnings(oracle::fixture("rule2_row.sl")).size() == 1);
  CHECK(warnings(p).empty());
}

TEST_CASE("solutions tag each line with its order") {
  const Solution s = make_solution(letters(kSolution), std::nullopt);
  REQUIRE(s.line_orders.size() == 8);
  CHECK(s.line_orders[0].second == Order::ALT);
  CHECK(s.line_orders[3].second == Order::BLT);
  CHECK(s.line_orders[4].first == LineRef{LineKind::Col, 0});
}
