#include "sudolyndon/hints.hpp"

#include "sudolyndon/errors.hpp"

#include <algorithm>
#include <bit>

namespace sudolyndon {

const char* rule_id(Rule r) noexcept {
  switch (r) {
    case Rule::R0Endpoints: return "R0";
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R4FactorBound: return "R4";
    case Rule::LineIntersection: return "LineIntersection";
  }
  return "?";
}

namespace {

std::string letter_str(Letter l) { return std::string(1, to_char(l)); }

std::string positions_str(const std::vector<Forced>& forced) {
  std::string s;
  for (std::size_t i = 0; i < forced.size(); ++i) {
    if (i) s += ", ";
    s += "cell " + std::to_string(forced[i].position + 1) + " = " + letter_str(forced[i].letter);
  }
  return s;
}

bool is(const PartialWord& w, std::size_t i, Letter l) { return w[i] && *w[i] == l; }
bool hole(const PartialWord& w, std::size_t i) { return !w[i]; }

void rule_endpoints(const PartialWord& w, std::vector<Deduction>& out) {
  const std::size_t last = w.size() - 1;
  if (w[0] && hole(w, last)) {
    const Letter first = *w[0];
    out.push_back({Rule::R0Endpoints, {{last, swap(first)}},
                   "R0: the first and last letters of a Lyndon word differ; the line starts with " +
                       letter_str(first) + ", so it ends with " + letter_str(swap(first)) + "."});
  } else if (w[last] && hole(w, 0)) {
    const Letter end = *w[last];
    out.push_back({Rule::R0Endpoints, {{0, swap(end)}},
                   "R0: the first and last letters of a Lyndon word differ; the line ends with " +
                       letter_str(end) + ", so it starts with " + letter_str(swap(end)) + "."});
  }
}

// `x` is the least letter of the order the pattern selects.
void rule_one(const PartialWord& w, Letter x, std::vector<Deduction>& out) {
  const std::size_t n = w.size();
  if (n < 4) return;
  const Letter y = swap(x);
  if (!hole(w, 0) || !hole(w, n - 1) || !is(w, 1, x) || !is(w, n - 2, y)) return;
  const std::string xs = letter_str(x), ys = letter_str(y);
  out.push_back({Rule::R1, {{0, x}, {n - 1, y}},
                 "R1: ?" + xs + "…" + ys + "? → " + xs + xs + "…" + ys + ys +
                     ". Starting with " + ys + " would make the line end with its own prefix " + ys +
                     xs + ", so it starts with " + xs + " and ends with " + ys + "."});
}

void rule_two(const PartialWord& w, Letter x, std::vector<Deduction>& out) {
  const std::size_t n = w.size();
  if (n < 4 || !is(w, 0, x) || !is(w, 1, swap(x))) return;
  const Letter y = swap(x);
  std::vector<Forced> forced;
  for (std::size_t i : {n - 2, n - 1}) {
    if (hole(w, i)) forced.push_back({i, y});
  }
  if (forced.empty()) return;
  const std::string xs = letter_str(x), ys = letter_str(y);
  out.push_back({Rule::R2, std::move(forced),
                 "R2: " + xs + ys + "…?? → " + xs + ys + "…" + ys + ys + ". A Lyndon word starting with " +
                     xs + ys + " ends with " + ys + ys + "."});
}

void rule_four(const PartialWord& w, Letter x, std::vector<Deduction>& out) {
  const std::size_t len = w.size();
  const Letter y = swap(x);
  std::size_t n = 0;
  while (n < len && is(w, n, x)) ++n;
  if (n == 0 || n >= len || !is(w, n, y)) return;
  std::vector<Forced> forced;
  for (std::size_t s = n + 1; s + n + 1 <= len; ++s) {
    std::size_t xs = 0, holes = 0, hole_at = 0;
    for (std::size_t i = s; i <= s + n; ++i) {
      if (is(w, i, x)) ++xs;
      else if (hole(w, i)) {
        ++holes;
        hole_at = i;
      }
    }
    if (xs == n && holes == 1 &&
        std::none_of(forced.begin(), forced.end(), [&](const Forced& f) { return f.position == hole_at; }))
      forced.push_back({hole_at, y});
  }
  if (forced.empty()) return;
  std::sort(forced.begin(), forced.end(), [](const Forced& a, const Forced& b) { return a.position < b.position; });
  const std::string run(n + 1, to_char(x));
  out.push_back({Rule::R4FactorBound, forced,
                 "R4: the line starts with " + std::string(n, to_char(x)) + letter_str(y) + ", so " + run +
                     " is not a factor: " + positions_str(forced) + "."});
}

}  // namespace

std::vector<Deduction> apply_named_rules(const PartialWord& line) {
  std::vector<Deduction> out;
  if (line.size() < 2) return out;
  rule_endpoints(line, out);
  for (Letter x : {Letter::A, Letter::B}) rule_one(line, x, out);
  for (Letter x : {Letter::A, Letter::B}) rule_two(line, x, out);
  for (Letter x : {Letter::A, Letter::B}) rule_four(line, x, out);
  return out;
}

std::vector<std::uint32_t> line_candidates(const PartialWord& line, const LineConstraints& extra) {
  const std::size_t len = line.size();
  std::uint32_t known = 0, value = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (!line[i]) continue;
    known |= std::uint32_t{1} << i;
    if (*line[i] == Letter::B) value |= std::uint32_t{1} << i;
  }
  std::vector<std::uint32_t> out;
  // Single letters are Lyndon under both orders; enumerate them once.
  for (Order o : {Order::ALT, Order::BLT}) {
    if (o == Order::BLT && len == 1) break;
    for (std::uint32_t w : enumerate_lyndon_masks(len, o)) {
      if (((w ^ value) & known) != 0) continue;
      if (extra.a_count && static_cast<int>(len) - std::popcount(w) != *extra.a_count) continue;
      if (!extra.forbidden_factors.empty() &&
          contains_any_factor(Word::from_mask(w, len).letters(), extra.forbidden_factors))
        continue;
      out.push_back(w);
    }
  }
  return out;
}

std::vector<Deduction> deduce_by_candidates(const PartialWord& line, const LineConstraints& extra) {
  const auto cands = line_candidates(line, extra);
  if (cands.empty()) return {};
  std::uint32_t all_b = ~std::uint32_t{0}, any_b = 0;
  for (std::uint32_t w : cands) {
    all_b &= w;
    any_b |= w;
  }
  std::vector<Forced> forced;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i]) continue;
    const std::uint32_t bit = std::uint32_t{1} << i;
    if (all_b & bit) forced.push_back({i, Letter::B});
    else if (!(any_b & bit)) forced.push_back({i, Letter::A});
  }
  if (forced.empty()) return {};
  std::string why = "LineIntersection: all " + std::to_string(cands.size()) +
                    " Lyndon word(s) fitting this line agree on " + positions_str(forced) + ".";
  return {{Rule::LineIntersection, std::move(forced), std::move(why)}};
}

namespace {

LineConstraints constraints_for(const Puzzle& p, const LineRef& ref) {
  LineConstraints c;
  if (ref.kind == LineKind::Row && p.row_acounts) c.a_count = (*p.row_acounts)[ref.index];
  if (ref.kind == LineKind::Col && p.col_acounts) c.a_count = (*p.col_acounts)[ref.index];
  c.forbidden_factors = p.forbidden_factors;
  return c;
}

// Hint for a line-level deduction, minus assignments to wildcard cells.
std::optional<Hint> to_hint(const Puzzle& p, const LineRef& ref, const std::vector<std::size_t>& cells,
                            const Deduction& d) {
  Hint h{d.rule, ref, {}, d.explanation};
  for (const Forced& f : d.forced) {
    const std::size_t flat = cells[f.position];
    if (p.cells[flat] == Cell::Wild) continue;
    h.assignments.push_back({flat / p.cols(), flat % p.cols(), f.letter});
  }
  if (h.assignments.empty()) return std::nullopt;
  return h;
}

bool subset_of(const std::vector<CellAssignment>& a, const std::vector<CellAssignment>& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](const CellAssignment& x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

}  // namespace

HintResult next_hint(const Puzzle& puzzle, const CellGrid& board) {
  if (!consistent_with_clues(puzzle, board))
    throw PreconditionError("board does not agree with the puzzle's clues");

  struct LineView {
    LineRef ref;
    std::vector<std::size_t> cells;
    PartialWord word;
    LineConstraints extra;
  };
  std::vector<LineView> views;
  for (const LineRef& ref : all_lines(puzzle)) {
    auto cells = line_cells(puzzle.rows(), puzzle.cols(), puzzle.boxes, ref);
    std::vector<Cell> content;
    for (std::size_t i : cells) content.push_back(board[i]);
    views.push_back({ref, std::move(cells), to_partial_word(content), constraints_for(puzzle, ref)});
  }

  for (const LineView& v : views) {
    if (line_candidates(v.word, v.extra).empty())
      return Contradiction{v.ref, to_string(v.ref) + " (" + v.word.str() +
                                      ") cannot be completed to an admissible Lyndon word."};
  }

  for (const LineView& v : views) {
    std::vector<Hint> fired;
    for (const Deduction& d : apply_named_rules(v.word))
      if (auto h = to_hint(puzzle, v.ref, v.cells, d)) fired.push_back(std::move(*h));
    // Prefer the first rule whose assignments no other fired rule strictly extends.
    for (std::size_t i = 0; i < fired.size(); ++i) {
      const bool dominated = std::any_of(fired.begin(), fired.end(), [&](const Hint& other) {
        return other.assignments.size() > fired[i].assignments.size() &&
               subset_of(fired[i].assignments, other.assignments);
      });
      if (!dominated) return fired[i];
    }
  }

  for (const LineView& v : views) {
    for (const Deduction& d : deduce_by_candidates(v.word, v.extra))
      if (auto h = to_hint(puzzle, v.ref, v.cells, d)) return *h;
  }
  return Exhausted{};
}

}  // namespace sudolyndon
