#include "sudolyndon/generator.hpp"

#include "sudolyndon/errors.hpp"
#include "sudolyndon/random.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace sudolyndon {

namespace {

// splitmix64 step, used to derive independent sub-seeds from the config seed.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<int> a_counts(const LetterGrid& g, bool rows) {
  std::vector<int> out(rows ? g.rows() : g.cols(), 0);
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (g(r, c) == Letter::A) ++out[rows ? r : c];
  return out;
}

std::optional<Generated> attempt(const GenConfig& config, std::uint64_t seed) {
  Puzzle blank;
  blank.cells = CellGrid(config.rows, config.cols, Cell::Hole);
  blank.boxes = config.boxes;
  blank.forbidden_factors = config.forbidden_factors;
  blank.variant = config.boxes ? Variant::Boxes : Variant::Base;

  SolveOptions sample;
  sample.shuffle_seed = mix(seed);
  sample.cap = 1;
  std::optional<LetterGrid> grid;
  for_each_solution(blank, sample, [&](const LetterGrid& g) {
    grid = g;
    return false;
  });
  if (!grid) throw GenerationError("no full grid satisfies these dimensions and constraints");

  Puzzle p = blank;
  p.cells = to_cells(*grid);
  const bool counts = config.variant == Variant::Counts || config.variant == Variant::CountsPlusClues;
  if (counts) {
    p.row_acounts = a_counts(*grid, true);
    p.col_acounts = a_counts(*grid, false);
  }

  std::vector<std::size_t> order(p.cells.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(mix(seed ^ 0x5bd1e995ULL));
  rng.shuffle(std::span<std::size_t>(order));
  for (std::size_t i : order) {
    const Cell saved = p.cells[i];
    p.cells[i] = Cell::Hole;
    if (is_unique(p) != Uniqueness::Unique) p.cells[i] = saved;
  }
  // Removal only shrinks the clue set, so one pass is already 1-minimal;
  // --minimize re-checks it.
  if (config.minimize && !is_minimal(p).minimal)
    throw GenerationError("removal pass left a redundant clue");

  if (config.variant == Variant::BoxesWild) {
    p.variant = Variant::BoxesWild;
    std::size_t wild = 0;
    for (std::size_t i : order) {
      if (p.cells[i] != Cell::Hole || wild == kDefaultWildBound) continue;
      p.cells[i] = Cell::Wild;
      if (wild_check(p).verdict == WildVerdict::Valid) ++wild;
      else p.cells[i] = Cell::Hole;
    }
  }
  p.variant = config.variant == Variant::BoxesWild ? Variant::BoxesWild : infer_variant(p);

  const auto& d = p.cells.data();
  if (std::none_of(d.begin(), d.end(), [](Cell c) { return c == Cell::Hole || c == Cell::Wild; }))
    return std::nullopt;

  return Generated{p, make_solution(*grid, p.boxes)};
}

}  // namespace

Generated generate(const GenConfig& config) {
  if (config.rows == 0 || config.cols == 0) throw PreconditionError("dimensions must be positive");
  const bool boxed = config.variant == Variant::Boxes || config.variant == Variant::BoxesWild;
  if (boxed && !config.boxes)
    throw PreconditionError(std::string("variant ") + to_string(config.variant) + " needs box dimensions");
  if (!boxed && config.boxes)
    throw PreconditionError(std::string("variant ") + to_string(config.variant) + " takes no box dimensions");
  if (config.max_attempts == 0) throw PreconditionError("max_attempts must be positive");

  for (std::size_t a = 0; a < config.max_attempts; ++a) {
    if (auto g = attempt(config, config.seed + a)) return std::move(*g);
  }
  throw GenerationError("no attempt out of " + std::to_string(config.max_attempts) +
                        " produced a puzzle with an empty cell (" + std::to_string(config.rows) + "x" +
                        std::to_string(config.cols) + " needs every cell as a clue)");
}

Minimality is_minimal(const Puzzle& puzzle, const SolveOptions& options) {
  if (is_unique(puzzle, options) != Uniqueness::Unique)
    throw PreconditionError("is_minimal requires a puzzle with exactly one solution");
  Puzzle p = puzzle;
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    if (!is_letter(p.cells[i])) continue;
    const Cell saved = p.cells[i];
    p.cells[i] = Cell::Hole;
    const bool still_unique = is_unique(p, options) == Uniqueness::Unique;
    p.cells[i] = saved;
    if (still_unique) return {false, std::pair{i / p.cols(), i % p.cols()}};
  }
  return {true, std::nullopt};
}

FminResult f_min_exhaustive(std::size_t n, std::size_t m, std::uint64_t budget) {
  const std::size_t cells = n * m;
  if (cells == 0) throw PreconditionError("dimensions must be positive");
  if (cells > 64) throw LimitError("exhaustive f_min supports at most 64 cells");

  Puzzle blank;
  blank.cells = CellGrid(n, m, Cell::Hole);
  SolveOptions opts;
  opts.max_dim = std::max<std::size_t>(16, std::max(n, m));
  std::vector<std::uint64_t> grids;
  for_each_solution(blank, opts, [&](const LetterGrid& g) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] == Letter::B) bits |= std::uint64_t{1} << i;
    grids.push_back(bits);
    return grids.size() <= budget;
  });

  // A k-subset S of grid G's cells is a uniquely solvable clue set iff no
  // other full grid agrees with G on S.
  FminResult result;
  result.exact = true;
  result.full_grids = grids.size();
  if (grids.empty()) throw GenerationError("no full grid exists at these dimensions");
  const auto pairs = static_cast<double>(grids.size()) * static_cast<double>(grids.size());
  double spent = 0;
  for (std::size_t k = 0; k <= cells; ++k) {
    double subsets = 1;
    for (std::size_t i = 0; i < k; ++i) subsets = subsets * static_cast<double>(cells - i) / static_cast<double>(i + 1);
    spent += subsets * pairs;
    if (spent > static_cast<double>(budget))
      throw LimitError("exhaustive f_min(" + std::to_string(n) + ", " + std::to_string(m) +
                       ") exceeds the work budget at k = " + std::to_string(k));
    // Walk all k-subsets of cell indices as bitmasks (Gosper's hack).
    const std::uint64_t full = cells == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;
    std::uint64_t s = k == 0 ? 0 : (k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
    while (true) {
      for (std::uint64_t g : grids) {
        const bool unique = std::none_of(grids.begin(), grids.end(), [&](std::uint64_t h) {
          return h != g && ((h ^ g) & s) == 0;
        });
        if (unique) {
          result.value = k;
          result.lower_bound = k;
          return result;
        }
      }
      if (k == 0 || s == (full & ~((std::uint64_t{1} << (cells - k)) - 1))) break;
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  result.value = cells;
  result.lower_bound = cells;
  return result;
}

FminResult f_min_sampled(std::size_t n, std::size_t m, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw PreconditionError("at least one sample is required");
  FminResult result;
  result.value = n * m;
  for (std::size_t i = 0; i < samples; ++i) {
    GenConfig config;
    config.rows = n;
    config.cols = m;
    config.seed = seed + i;
    config.max_attempts = 1;
    try {
      result.value = std::min(result.value, generate(config).puzzle.clue_count());
    } catch (const GenerationError&) {
      // Every cell stayed a clue; value already covers that.
    }
  }
  result.lower_bound = 1;
  result.exact = result.value == result.lower_bound;
  return result;
}

}  // namespace sudolyndon
