#pragma once

#include "sudolyndon/grid.hpp"
#include "sudolyndon/solver.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace sudolyndon {

struct GenConfig {
  std::size_t rows = 4;
  std::size_t cols = 4;
  Variant variant = Variant::Base;
  std::uint64_t seed = 0;
  /// Certify the result with is_minimal. The removal pass visits every clue
  /// either way.
  bool minimize = true;
  /// Number of sampled full grids to try before giving up.
  std::size_t max_attempts = 8;
  /// Required for the box variants.
  std::optional<BoxDims> boxes;
  std::vector<Word> forbidden_factors;
};

struct Generated {
  Puzzle puzzle;
  Solution solution;
};

/// Samples a full grid with a seeded search, turns every cell into a clue and
/// deletes clues in seeded random order while the puzzle stays uniquely
/// solvable. Counts variants also fix the sampled grid's a-counts; boxesWild
/// additionally turns holes into wildcards where wild_check stays valid.
/// Deterministic for a given config. Throws GenerationError when no attempt
/// leaves a single hole (e.g. 1x1) or no full grid exists.
Generated generate(const GenConfig& config);

struct Minimality {
  bool minimal = false;
  /// A clue (row, col) whose removal keeps the solution unique.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Whether no single clue can be removed without losing uniqueness. Throws
/// PreconditionError unless the puzzle has exactly one solution.
Minimality is_minimal(const Puzzle& puzzle, const SolveOptions& options = {});

struct FminResult {
  /// Exhaustive mode: f(n, m). Sampling mode: the smallest clue count seen,
  /// an upper bound on f(n, m).
  std::size_t value = 0;
  bool exact = false;
  std::size_t lower_bound = 1;
  std::size_t full_grids = 0;  // exhaustive mode only
};

inline constexpr std::uint64_t kDefaultFminBudget = 2'000'000'000;

/// Smallest k such that some full grid has a k-clue subset with a unique
/// solution, by enumerating (grid, subset) pairs with k ascending. Throws
/// LimitError when the estimated work exceeds `budget` or n*m > 64.
FminResult f_min_exhaustive(std::size_t n, std::size_t m, std::uint64_t budget = kDefaultFminBudget);

/// Upper bound from `samples` minimized generator runs (seeds seed, seed+1, ...).
FminResult f_min_sampled(std::size_t n, std::size_t m, std::size_t samples, std::uint64_t seed = 0);

}  // namespace sudolyndon
