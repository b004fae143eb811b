#pragma once

#include "sudolyndon/grid.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sudolyndon {

inline constexpr std::size_t kMaxSolutionCap = 1'000'000;

struct SolveOptions {
  /// Number of solutions to collect; 2 suffices to decide uniqueness.
  std::size_t cap = 2;
  /// Soft limit on rows and columns.
  std::size_t max_dim = 16;
  /// Abort with BudgetExceeded after this many search nodes.
  std::optional<std::uint64_t> node_budget;
  /// When set, each line's candidate order is shuffled with this seed
  /// instead of the canonical (a<b words, then b<a words) order.
  std::optional<std::uint64_t> shuffle_seed;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t line_filterings = 0;
  std::size_t initial_candidates = 0;  // summed over lines
  std::size_t smallest_line_candidates = 0;
  std::size_t largest_line_candidates = 0;
};

struct SolveResult {
  std::size_t count = 0;  // exact unless truncated, in which case count == cap
  std::vector<Solution> solutions;
  bool truncated = false;
  SolveStats stats;
};

/// Wildcards are treated as holes. Throws LimitError when a dimension
/// exceeds options.max_dim or a box is longer than the enumeration bound.
SolveResult solve(const Puzzle& puzzle, const SolveOptions& options = {});

/// Streams every solution to `visit` in the same order solve() reports them;
/// `visit` returns false to stop early.
SolveStats for_each_solution(const Puzzle& puzzle, const SolveOptions& options,
                             const std::function<bool(const LetterGrid&)>& visit);

enum class Uniqueness { Zero, Unique, Multiple };

const char* to_string(Uniqueness u) noexcept;

Uniqueness is_unique(const Puzzle& puzzle, SolveOptions options = {});

/// Number of full n x m grids whose rows and columns are all Lyndon words.
/// Throws LimitError when n * m exceeds max_cells.
std::uint64_t count_full_grids(std::size_t n, std::size_t m, std::size_t max_cells = 36);

/// Number of free cells in scheme_grid(n, m, ...): (ceil(n/2)-1)(ceil(m/2)-1).
std::size_t scheme_star_count(std::size_t n, std::size_t m);

/// The block construction: a-block top-left, b-blocks top-right and
/// bottom-left, bottom-right block with last row and last column a and its
/// interior filled row-major from `stars`. Every result is a valid full grid.
LetterGrid scheme_grid(std::size_t n, std::size_t m, std::span<const Letter> stars);

enum class WildVerdict { Valid, Invalid };

struct WildCheck {
  WildVerdict verdict = WildVerdict::Invalid;
  std::string reason;
  /// Solution for the all-a wildcard assignment, when it is unique.
  std::optional<LetterGrid> completion;
};

inline constexpr std::size_t kDefaultWildBound = 12;

/// Valid iff every assignment of letters to the wildcards leaves exactly one
/// completion and all those completions agree off the wildcards.
WildCheck wild_check(const Puzzle& puzzle, const SolveOptions& options = {},
                     std::size_t max_wild = kDefaultWildBound);

}  // namespace sudolyndon
