#pragma once

#include "sudolyndon/grid.hpp"

#include <string>
#include <string_view>

namespace sudolyndon {

/// Parses the line-oriented v1 puzzle format (see docs/format.md):
///
///   sudolyndon 1
///   size <n> <m>
///   [boxes <r> <c>] [rowcounts ...] [colcounts ...] [forbid <word> ...]
///   grid
///   <n lines of m characters from {a, b, ., *}>
///
/// Blank lines and '#' comments are allowed before "grid". The variant is
/// inferred from the side constraints. Throws ParseError with a 1-based
/// line/column location.
Puzzle parse_puzzle(std::string_view text);

/// Canonical rendering: fixed directive order, single spaces, one trailing newline.
std::string render_puzzle(const Puzzle& p);

/// Renders a solved grid as a Base puzzle file carrying the puzzle's side constraints.
std::string render_solution(const LetterGrid& g, const Puzzle& constraints);

}  // namespace sudolyndon
