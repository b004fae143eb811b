#include "sudolyndon/grid.hpp"

#include "sudolyndon/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sudolyndon {

char to_char(Cell c) noexcept {
  switch (c) {
    case Cell::A: return 'a';
    case Cell::B: return 'b';
    case Cell::Hole: return '.';
    case Cell::Wild: return '*';
  }
  return '?';
}

std::optional<Cell> cell_from_char(char ch) noexcept {
  switch (ch) {
    case 'a': return Cell::A;
    case 'b': return Cell::B;
    case '.': return Cell::Hole;
    case '*': return Cell::Wild;
    default: return std::nullopt;
  }
}

CellGrid cell_grid_from_rows(const std::vector<std::string>& rows) {
  if (rows.empty() || rows.front().empty())
    throw ParseError(ParseErrorKind::Dimension, "grid must have at least one row and column");
  const std::size_t m = rows.front().size();
  CellGrid g(rows.size(), m, Cell::Hole);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m)
      throw ParseError(ParseErrorKind::Dimension, "row " + std::to_string(r) + " has length " +
                                                      std::to_string(rows[r].size()) +
                                                      ", expected " + std::to_string(m));
    for (std::size_t c = 0; c < m; ++c) {
      auto cell = cell_from_char(rows[r][c]);
      if (!cell)
        throw ParseError(ParseErrorKind::IllegalCharacter,
                         "illegal cell character '" + std::string(1, rows[r][c]) + "' at row " +
                             std::to_string(r) + ", column " + std::to_string(c));
      g(r, c) = *cell;
    }
  }
  return g;
}

std::vector<std::string> to_rows(const CellGrid& g) {
  std::vector<std::string> out(g.rows(), std::string(g.cols(), '.'));
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) out[r][c] = to_char(g(r, c));
  return out;
}

std::vector<std::string> to_rows(const LetterGrid& g) { return to_rows(to_cells(g)); }

CellGrid to_cells(const LetterGrid& g) {
  CellGrid out(g.rows(), g.cols(), Cell::Hole);
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = to_cell(g[i]);
  return out;
}

std::optional<LetterGrid> to_letters(const CellGrid& g) {
  LetterGrid out(g.rows(), g.cols(), Letter::A);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!is_letter(g[i])) return std::nullopt;
    out[i] = to_letter(g[i]);
  }
  return out;
}

const char* to_string(Variant v) noexcept {
  switch (v) {
    case Variant::Base: return "base";
    case Variant::Counts: return "counts";
    case Variant::CountsPlusClues: return "countsPlusClues";
    case Variant::Boxes: return "boxes";
    case Variant::BoxesWild: return "boxesWild";
  }
  return "base";
}

std::optional<Variant> variant_from_string(std::string_view s) noexcept {
  for (Variant v : {Variant::Base, Variant::Counts, Variant::CountsPlusClues, Variant::Boxes,
                    Variant::BoxesWild})
    if (s == to_string(v)) return v;
  return std::nullopt;
}

std::size_t Puzzle::clue_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(cells.data().begin(), cells.data().end(), [](Cell c) { return is_letter(c); }));
}

Variant infer_variant(const Puzzle& p) {
  const auto& d = p.cells.data();
  if (std::find(d.begin(), d.end(), Cell::Wild) != d.end()) return Variant::BoxesWild;
  if (p.boxes) return Variant::Boxes;
  if (p.row_acounts || p.col_acounts)
    return p.clue_count() > 0 ? Variant::CountsPlusClues : Variant::Counts;
  return Variant::Base;
}

void validate(const Puzzle& p) {
  const std::size_t n = p.rows();
  const std::size_t m = p.cols();
  if (n == 0 || m == 0) throw ParseError(ParseErrorKind::Dimension, "grid must be nonempty");
  if (p.row_acounts) {
    if (p.row_acounts->size() != n)
      throw ParseError(ParseErrorKind::Dimension, "rowcounts needs " + std::to_string(n) + " entries");
    for (int v : *p.row_acounts)
      if (v < 0 || static_cast<std::size_t>(v) > m)
        throw ParseError(ParseErrorKind::CountOutOfRange,
                         "row a-count " + std::to_string(v) + " outside [0, " + std::to_string(m) + "]");
  }
  if (p.col_acounts) {
    if (p.col_acounts->size() != m)
      throw ParseError(ParseErrorKind::Dimension, "colcounts needs " + std::to_string(m) + " entries");
    for (int v : *p.col_acounts)
      if (v < 0 || static_cast<std::size_t>(v) > n)
        throw ParseError(ParseErrorKind::CountOutOfRange,
                         "column a-count " + std::to_string(v) + " outside [0, " + std::to_string(n) + "]");
  }
  if (p.row_acounts && p.col_acounts) {
    const int rs = std::accumulate(p.row_acounts->begin(), p.row_acounts->end(), 0);
    const int cs = std::accumulate(p.col_acounts->begin(), p.col_acounts->end(), 0);
    if (rs != cs)
      throw ParseError(ParseErrorKind::CountMismatch, "row a-counts sum to " + std::to_string(rs) +
                                                          " but column a-counts sum to " +
                                                          std::to_string(cs));
  }
  if (p.boxes) {
    const auto [br, bc] = *p.boxes;
    if (br == 0 || bc == 0 || n % br != 0 || m % bc != 0)
      throw ParseError(ParseErrorKind::BoxTiling, "boxes " + std::to_string(br) + "x" +
                                                      std::to_string(bc) + " do not tile a " +
                                                      std::to_string(n) + "x" + std::to_string(m) +
                                                      " grid");
  }
  const auto& d = p.cells.data();
  const bool has_wild = std::find(d.begin(), d.end(), Cell::Wild) != d.end();
  if (has_wild && p.variant != Variant::BoxesWild)
    throw ParseError(ParseErrorKind::WildcardOutsideVariant,
                     "wildcard cells are only allowed in the boxesWild variant");
  if ((p.variant == Variant::Boxes || p.variant == Variant::BoxesWild) && !p.boxes)
    throw ParseError(ParseErrorKind::VariantMismatch,
                     std::string("variant ") + to_string(p.variant) + " requires box dimensions");
  if ((p.variant == Variant::Counts || p.variant == Variant::CountsPlusClues) && !p.row_acounts &&
      !p.col_acounts)
    throw ParseError(ParseErrorKind::VariantMismatch,
                     std::string("variant ") + to_string(p.variant) + " requires a-counts");
  for (const Word& f : p.forbidden_factors)
    if (f.size() > 64) throw ParseError(ParseErrorKind::Syntax, "forbidden factor too long");
}

std::vector<std::string> warnings(const Puzzle& p) {
  std::vector<std::string> out;
  if (p.cols() == 1)
    out.emplace_back("rows have length 1 and are satisfied by either letter");
  if (p.rows() == 1)
    out.emplace_back("columns have length 1 and are satisfied by either letter");
  if (p.boxes && p.boxes->rows * p.boxes->cols == 1)
    out.emplace_back("boxes have size 1 and are satisfied by either letter");
  return out;
}

const char* to_string(LineKind k) noexcept {
  switch (k) {
    case LineKind::Row: return "row";
    case LineKind::Col: return "col";
    case LineKind::Box: return "box";
  }
  return "row";
}

std::string to_string(const LineRef& ref) {
  return std::string(to_string(ref.kind)) + " " + std::to_string(ref.index);
}

std::vector<LineRef> all_lines(std::size_t rows, std::size_t cols,
                               const std::optional<BoxDims>& boxes) {
  std::vector<LineRef> out;
  for (std::size_t i = 0; i < rows; ++i) out.push_back({LineKind::Row, i});
  for (std::size_t i = 0; i < cols; ++i) out.push_back({LineKind::Col, i});
  if (boxes) {
    const std::size_t count = (rows / boxes->rows) * (cols / boxes->cols);
    for (std::size_t i = 0; i < count; ++i) out.push_back({LineKind::Box, i});
  }
  return out;
}

std::vector<std::size_t> line_cells(std::size_t rows, std::size_t cols,
                                    const std::optional<BoxDims>& boxes, LineRef ref) {
  std::vector<std::size_t> out;
  switch (ref.kind) {
    case LineKind::Row:
      for (std::size_t c = 0; c < cols; ++c) out.push_back(ref.index * cols + c);
      break;
    case LineKind::Col:
      for (std::size_t r = 0; r < rows; ++r) out.push_back(r * cols + ref.index);
      break;
    case LineKind::Box: {
      if (!boxes) throw PreconditionError("box line requested without box dimensions");
      const std::size_t per_row = cols / boxes->cols;
      const std::size_t r0 = (ref.index / per_row) * boxes->rows;
      const std::size_t c0 = (ref.index % per_row) * boxes->cols;
      for (std::size_t r = r0; r < r0 + boxes->rows; ++r)
        for (std::size_t c = c0; c < c0 + boxes->cols; ++c) out.push_back(r * cols + c);
      break;
    }
  }
  return out;
}

PartialWord to_partial_word(const std::vector<Cell>& cells) {
  std::vector<std::optional<Letter>> out;
  out.reserve(cells.size());
  for (Cell c : cells) out.push_back(is_letter(c) ? std::optional(to_letter(c)) : std::nullopt);
  return PartialWord(std::move(out));
}

const char* to_string(LineStatus s) noexcept {
  switch (s) {
    case LineStatus::AltValid: return "altValid";
    case LineStatus::BltValid: return "bltValid";
    case LineStatus::Invalid: return "invalid";
  }
  return "invalid";
}

LineStatus line_status(std::span<const Letter> w) noexcept {
  if (w.empty()) return LineStatus::Invalid;
  const Order o = order_starting_with(w[0]);
  if (!is_lyndon(w, o)) return LineStatus::Invalid;
  return o == Order::ALT ? LineStatus::AltValid : LineStatus::BltValid;
}

bool contains_any_factor(std::span<const Letter> w, const std::vector<Word>& factors) {
  for (const Word& f : factors) {
    const auto needle = f.letters();
    std::boyer_moore_horspool_searcher searcher(needle.begin(), needle.end());
    if (std::search(w.begin(), w.end(), searcher) != w.end()) return true;
  }
  return false;
}

GridReport check_grid(const LetterGrid& g, const Puzzle& constraints) {
  if (g.rows() != constraints.rows() || g.cols() != constraints.cols())
    throw PreconditionError("grid dimensions do not match the puzzle");
  GridReport report;
  std::vector<Letter> buffer;
  for (const LineRef& ref : all_lines(constraints)) {
    buffer.clear();
    for (std::size_t i : line_cells(g.rows(), g.cols(), constraints.boxes, ref)) buffer.push_back(g[i]);
    LineVerdict v{ref, line_status(buffer), true, std::nullopt};
    if (!constraints.forbidden_factors.empty())
      v.factors_ok = !contains_any_factor(buffer, constraints.forbidden_factors);
    const std::optional<std::vector<int>>* counts = nullptr;
    if (ref.kind == LineKind::Row) counts = &constraints.row_acounts;
    if (ref.kind == LineKind::Col) counts = &constraints.col_acounts;
    if (counts && *counts) {
      const auto as = std::count(buffer.begin(), buffer.end(), Letter::A);
      v.count_ok = as == (**counts)[ref.index];
    }
    report.lyndon_ok &= v.status != LineStatus::Invalid;
    report.factors_ok &= v.factors_ok;
    report.counts_ok &= v.count_ok.value_or(true);
    report.lines.push_back(v);
  }
  report.pass = report.lyndon_ok && report.factors_ok && report.counts_ok;
  return report;
}

bool consistent_with_clues(const Puzzle& p, const CellGrid& board) {
  if (board.rows() != p.rows() || board.cols() != p.cols()) return false;
  for (std::size_t i = 0; i < board.size(); ++i) {
    const Cell clue = p.cells[i];
    if (is_letter(clue) && board[i] != clue) return false;
    if (!is_letter(clue) && clue != Cell::Wild && board[i] == Cell::Wild) return false;
  }
  return true;
}

Solution make_solution(LetterGrid grid, const std::optional<BoxDims>& boxes) {
  Solution s{std::move(grid), {}};
  for (const LineRef& ref : all_lines(s.grid.rows(), s.grid.cols(), boxes)) {
    const auto cells = line_cells(s.grid.rows(), s.grid.cols(), boxes, ref);
    s.line_orders.emplace_back(ref, order_starting_with(s.grid[cells.front()]));
  }
  return s;
}

LetterGrid transposed(const LetterGrid& g) {
  LetterGrid out(g.cols(), g.rows(), Letter::A);
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) out(c, r) = g(r, c);
  return out;
}

LetterGrid swapped(const LetterGrid& g) {
  LetterGrid out = g;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = swap(out[i]);
  return out;
}

Puzzle transposed(const Puzzle& p) {
  if (p.boxes)
    throw PreconditionError("transposing a boxed puzzle does not preserve its box words");
  Puzzle out = p;
  out.cells = CellGrid(p.cols(), p.rows(), Cell::Hole);
  for (std::size_t r = 0; r < p.rows(); ++r)
    for (std::size_t c = 0; c < p.cols(); ++c) out.cells(c, r) = p.cells(r, c);
  std::swap(out.row_acounts, out.col_acounts);
  return out;
}

Puzzle swapped(const Puzzle& p) {
  Puzzle out = p;
  for (std::size_t i = 0; i < out.cells.size(); ++i)
    if (is_letter(out.cells[i])) out.cells[i] = to_cell(swap(to_letter(out.cells[i])));
  if (out.row_acounts)
    for (int& v : *out.row_acounts) v = static_cast<int>(p.cols()) - v;
  if (out.col_acounts)
    for (int& v : *out.col_acounts) v = static_cast<int>(p.rows()) - v;
  for (Word& f : out.forbidden_factors) f = f.swapped();
  return out;
}

}  // namespace sudolyndon
