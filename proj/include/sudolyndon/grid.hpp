#pragma once

#include "sudolyndon/lyndon.hpp"
#include "sudolyndon/partial_word.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sudolyndon {

/// '.' is a hole, '*' a Variant-4 wildcard.
enum class Cell : std::uint8_t { A, B, Hole, Wild };

constexpr Cell to_cell(Letter l) noexcept { return l == Letter::A ? Cell::A : Cell::B; }
constexpr bool is_letter(Cell c) noexcept { return c == Cell::A || c == Cell::B; }
constexpr Letter to_letter(Cell c) noexcept { return c == Cell::A ? Letter::A : Letter::B; }
char to_char(Cell c) noexcept;
std::optional<Cell> cell_from_char(char ch) noexcept;

/// Row-major matrix.
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, T fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  T& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  T& operator[](std::size_t flat) noexcept { return data_[flat]; }
  const T& operator[](std::size_t flat) const noexcept { return data_[flat]; }

  const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using CellGrid = Grid<Cell>;
using LetterGrid = Grid<Letter>;

/// Builds a grid from row strings over {a, b, ., *}. Throws ParseError.
CellGrid cell_grid_from_rows(const std::vector<std::string>& rows);
std::vector<std::string> to_rows(const CellGrid& g);
std::vector<std::string> to_rows(const LetterGrid& g);
CellGrid to_cells(const LetterGrid& g);
/// The letter grid when every cell is a letter.
std::optional<LetterGrid> to_letters(const CellGrid& g);

enum class Variant : std::uint8_t { Base, Counts, CountsPlusClues, Boxes, BoxesWild };

const char* to_string(Variant v) noexcept;
std::optional<Variant> variant_from_string(std::string_view s) noexcept;

struct BoxDims {
  std::size_t rows = 0;
  std::size_t cols = 0;
  friend bool operator==(const BoxDims&, const BoxDims&) = default;
};

struct Puzzle {
  CellGrid cells;
  Variant variant = Variant::Base;
  std::optional<std::vector<int>> row_acounts;
  std::optional<std::vector<int>> col_acounts;
  std::optional<BoxDims> boxes;
  std::vector<Word> forbidden_factors;

  std::size_t rows() const noexcept { return cells.rows(); }
  std::size_t cols() const noexcept { return cells.cols(); }
  std::size_t clue_count() const noexcept;

  friend bool operator==(const Puzzle&, const Puzzle&) = default;
};

/// The variant a puzzle's side constraints imply: wildcards -> BoxesWild,
/// boxes -> Boxes, counts -> Counts or CountsPlusClues (when clues exist).
Variant infer_variant(const Puzzle& p);

/// Checks every structural invariant; throws ParseError (without location)
/// naming the first violation.
void validate(const Puzzle& p);

/// Human-facing notes, e.g. length-1 lines that can never constrain anything.
std::vector<std::string> warnings(const Puzzle& p);

enum class LineKind : std::uint8_t { Row, Col, Box };

const char* to_string(LineKind k) noexcept;

struct LineRef {
  LineKind kind = LineKind::Row;
  std::size_t index = 0;
  friend auto operator<=>(const LineRef&, const LineRef&) = default;
};

std::string to_string(const LineRef& ref);

/// Rows, then columns, then boxes (row-major over the tiling).
std::vector<LineRef> all_lines(std::size_t rows, std::size_t cols,
                               const std::optional<BoxDims>& boxes = std::nullopt);
inline std::vector<LineRef> all_lines(const Puzzle& p) {
  return all_lines(p.rows(), p.cols(), p.boxes);
}

/// Flat cell indices of a line in reading order: rows left to right, columns
/// top-down, boxes row by row from the top one.
std::vector<std::size_t> line_cells(std::size_t rows, std::size_t cols,
                                    const std::optional<BoxDims>& boxes, LineRef ref);

template <class T>
std::vector<T> extract_line(const Grid<T>& g, LineRef ref,
                            const std::optional<BoxDims>& boxes = std::nullopt) {
  std::vector<T> out;
  for (std::size_t i : line_cells(g.rows(), g.cols(), boxes, ref)) out.push_back(g[i]);
  return out;
}

/// A line of cells as a partial word; wildcards read as holes.
PartialWord to_partial_word(const std::vector<Cell>& cells);

enum class LineStatus : std::uint8_t { AltValid, BltValid, Invalid };

const char* to_string(LineStatus s) noexcept;

struct LineVerdict {
  LineRef line;
  LineStatus status = LineStatus::Invalid;
  bool factors_ok = true;
  std::optional<bool> count_ok;
};

struct GridReport {
  std::vector<LineVerdict> lines;
  bool lyndon_ok = true;
  bool counts_ok = true;
  bool factors_ok = true;
  bool pass = true;
};

/// Status of one full line: the order its first letter selects, if the word
/// is Lyndon under it. (A length-1 word is Lyndon under both orders.)
LineStatus line_status(std::span<const Letter> w) noexcept;

/// Verifies a fully assigned grid against a puzzle's rules and side
/// constraints. Linear in the number of cells.
GridReport check_grid(const LetterGrid& g, const Puzzle& constraints);

/// True when every clue of `p` agrees with `board` (wildcards accept anything).
bool consistent_with_clues(const Puzzle& p, const CellGrid& board);

/// True when `w` contains any of `factors`.
bool contains_any_factor(std::span<const Letter> w, const std::vector<Word>& factors);

/// A solved grid with the order that validates each line.
struct Solution {
  LetterGrid grid;
  std::vector<std::pair<LineRef, Order>> line_orders;
  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Tags each line with the order its first letter selects.
Solution make_solution(LetterGrid grid, const std::optional<BoxDims>& boxes);

Puzzle transposed(const Puzzle& p);
Puzzle swapped(const Puzzle& p);
LetterGrid transposed(const LetterGrid& g);
LetterGrid swapped(const LetterGrid& g);

}  // namespace sudolyndon
