#pragma once

#include "sudolyndon/grid.hpp"
#include "sudolyndon/partial_word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sudolyndon {

enum class Rule {
  R0Endpoints,       // first and last letters differ
  R1,                // ?a…b? -> aa…bb
  R2,                // ab…?? -> ab…bb
  R4FactorBound,     // prefix a^n b forbids the factor a^(n+1)
  LineIntersection,  // letter shared by every Lyndon completion
};

/// "R0", "R1", "R2", "R4" or "LineIntersection".
const char* rule_id(Rule r) noexcept;

struct Forced {
  std::size_t position;
  Letter letter;
  friend bool operator==(const Forced&, const Forced&) = default;
};

/// Letters a rule forces into the holes of one line.
struct Deduction {
  Rule rule;
  std::vector<Forced> forced;
  std::string explanation;
};

/// Every named rule that assigns at least one hole, in precedence order
/// R0, R1, R2, R4. Each deduction is computed from `line` as given (rules
/// are not chained). Lines shorter than 2 yield nothing.
std::vector<Deduction> apply_named_rules(const PartialWord& line);

/// Extra per-line restrictions coming from the puzzle's side constraints.
struct LineConstraints {
  std::optional<int> a_count;
  std::vector<Word> forbidden_factors;
};

/// All Lyndon completions of `line` under either order that satisfy `extra`,
/// as bitmasks (bit i set iff letter i is b). Throws LimitError when the
/// line is longer than the enumeration bound.
std::vector<std::uint32_t> line_candidates(const PartialWord& line, const LineConstraints& extra = {});

/// One LineIntersection deduction holding every hole on which all
/// completions agree; empty when nothing is forced or no completion exists.
std::vector<Deduction> deduce_by_candidates(const PartialWord& line, const LineConstraints& extra = {});

struct CellAssignment {
  std::size_t row;
  std::size_t col;
  Letter letter;
  friend bool operator==(const CellAssignment&, const CellAssignment&) = default;
};

struct Hint {
  Rule rule;
  LineRef line;
  std::vector<CellAssignment> assignments;
  std::string explanation;
};

struct Exhausted {};

struct Contradiction {
  LineRef line;
  std::string explanation;
};

using HintResult = std::variant<Hint, Exhausted, Contradiction>;

/// The next teachable move on `board`. Lines are scanned rows, columns, then
/// boxes; named rules take precedence over candidate intersection. A line
/// with no admissible completion yields Contradiction. Wildcard cells are
/// never assigned. Throws PreconditionError when `board` disagrees with the
/// puzzle's clues.
HintResult next_hint(const Puzzle& puzzle, const CellGrid& board);

}  // namespace sudolyndon
