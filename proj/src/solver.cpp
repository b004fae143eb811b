#include "sudolyndon/solver.hpp"

#include "sudolyndon/errors.hpp"
#include "sudolyndon/random.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace sudolyndon {

namespace {

constexpr std::int8_t kUnknown = -1;

struct Line {
  LineRef ref;
  std::vector<std::size_t> cells;
};

struct State {
  std::vector<std::int8_t> cell;  // kUnknown, 0 (a) or 1 (b)
  std::vector<std::vector<std::uint32_t>> candidates;
};

bool has_factor(std::uint32_t word, std::size_t length, const Word& factor) {
  const std::size_t k = factor.size();
  if (k > length) return false;
  const auto f = static_cast<std::uint32_t>(factor.mask());
  const std::uint32_t window = k >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;
  for (std::size_t s = 0; s + k <= length; ++s)
    if (((word >> s) & window) == f) return true;
  return false;
}

class Search {
 public:
  Search(const Puzzle& puzzle, const SolveOptions& options) : options_(options) {
    validate(puzzle);
    if (puzzle.rows() > options.max_dim || puzzle.cols() > options.max_dim)
      throw LimitError("grid " + std::to_string(puzzle.rows()) + "x" + std::to_string(puzzle.cols()) +
                       " exceeds the solver limit of " + std::to_string(options.max_dim));
    rows_ = puzzle.rows();
    cols_ = puzzle.cols();
    boxes_ = puzzle.boxes;
    for (const LineRef& ref : all_lines(puzzle)) {
      auto cells = line_cells(rows_, cols_, boxes_, ref);
      if (cells.size() > kDefaultEnumerationBound)
        throw LimitError(to_string(ref) + " has length " + std::to_string(cells.size()) +
                         ", above the enumeration bound " + std::to_string(kDefaultEnumerationBound));
      lines_.push_back({ref, std::move(cells)});
    }
    cell_lines_.resize(rows_ * cols_);
    for (std::size_t li = 0; li < lines_.size(); ++li)
      for (std::size_t c : lines_[li].cells) cell_lines_[c].push_back(li);

    root_.cell.assign(rows_ * cols_, kUnknown);
    for (std::size_t i = 0; i < puzzle.cells.size(); ++i)
      if (is_letter(puzzle.cells[i])) root_.cell[i] = static_cast<std::int8_t>(to_letter(puzzle.cells[i]));

    std::optional<Rng> rng;
    if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);
    for (const Line& line : lines_) {
      const std::size_t len = line.cells.size();
      std::optional<int> count;
      if (line.ref.kind == LineKind::Row && puzzle.row_acounts) count = (*puzzle.row_acounts)[line.ref.index];
      if (line.ref.kind == LineKind::Col && puzzle.col_acounts) count = (*puzzle.col_acounts)[line.ref.index];
      std::vector<std::uint32_t> cands;
      for (std::uint32_t w : pool(len)) {
        if (count && static_cast<int>(len) - std::popcount(w) != *count) continue;
        if (std::any_of(puzzle.forbidden_factors.begin(), puzzle.forbidden_factors.end(),
                        [&](const Word& f) { return has_factor(w, len, f); }))
          continue;
        cands.push_back(w);
      }
      if (rng) rng->shuffle(std::span<std::uint32_t>(cands));
      stats_.initial_candidates += cands.size();
      root_.candidates.push_back(std::move(cands));
    }
    if (!lines_.empty()) {
      auto [lo, hi] = std::minmax_element(root_.candidates.begin(), root_.candidates.end(),
                                          [](const auto& a, const auto& b) { return a.size() < b.size(); });
      stats_.smallest_line_candidates = lo->size();
      stats_.largest_line_candidates = hi->size();
    }
  }

  SolveStats run(const std::function<bool(const LetterGrid&)>& visit) {
    visit_ = &visit;
    std::vector<std::size_t> all(lines_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    State s = root_;
    if (propagate(s, all)) descend(std::move(s));
    return stats_;
  }

 private:
  // a<b words in a<b lex order, then b<a words in b<a lex order.
  const std::vector<std::uint32_t>& pool(std::size_t len) {
    auto it = pools_.find(len);
    if (it != pools_.end()) return it->second;
    auto words = enumerate_lyndon_masks(len, Order::ALT);
    // Single letters are Lyndon under both orders; keep each once.
    if (len > 1) {
      auto blt = enumerate_lyndon_masks(len, Order::BLT);
      words.insert(words.end(), blt.begin(), blt.end());
    }
    return pools_.emplace(len, std::move(words)).first->second;
  }

  // Filters the queued lines against the known cells and commits every
  // letter shared by all remaining candidates, until nothing changes.
  bool propagate(State& s, std::vector<std::size_t> queue) {
    std::vector<char> queued(lines_.size(), 0);
    for (std::size_t li : queue) queued[li] = 1;
    while (!queue.empty()) {
      const std::size_t li = queue.back();
      queue.pop_back();
      queued[li] = 0;
      ++stats_.line_filterings;
      const auto& cells = lines_[li].cells;
      std::uint32_t known = 0, value = 0;
      for (std::size_t p = 0; p < cells.size(); ++p) {
        const std::int8_t v = s.cell[cells[p]];
        if (v == kUnknown) continue;
        known |= std::uint32_t{1} << p;
        if (v == 1) value |= std::uint32_t{1} << p;
      }
      auto& cands = s.candidates[li];
      std::erase_if(cands, [&](std::uint32_t w) { return ((w ^ value) & known) != 0; });
      if (cands.empty()) return false;
      std::uint32_t all_b = ~std::uint32_t{0}, any_b = 0;
      for (std::uint32_t w : cands) {
        all_b &= w;
        any_b |= w;
      }
      for (std::size_t p = 0; p < cells.size(); ++p) {
        const std::uint32_t bit = std::uint32_t{1} << p;
        if (known & bit) continue;
        std::int8_t forced = kUnknown;
        if (!(any_b & bit)) forced = 0;
        if (all_b & bit) forced = 1;
        if (forced == kUnknown) continue;
        s.cell[cells[p]] = forced;
        for (std::size_t other : cell_lines_[cells[p]]) {
          if (other != li && !queued[other]) {
            queued[other] = 1;
            queue.push_back(other);
          }
        }
      }
    }
    return true;
  }

  // Returns false when the visitor asked to stop.
  bool descend(State s) {
    ++stats_.nodes;
    if (options_.node_budget && stats_.nodes > *options_.node_budget)
      throw BudgetExceeded("solver node budget of " + std::to_string(*options_.node_budget) + " exhausted");

    std::size_t best = lines_.size();
    for (std::size_t li = 0; li < lines_.size(); ++li) {
      const std::size_t k = s.candidates[li].size();
      if (k > 1 && (best == lines_.size() || k < s.candidates[best].size())) best = li;
    }
    if (best == lines_.size()) {
      LetterGrid g(rows_, cols_, Letter::A);
      for (std::size_t i = 0; i < g.size(); ++i) g[i] = static_cast<Letter>(s.cell[i]);
      return (*visit_)(g);
    }

    const auto choices = s.candidates[best];
    const auto& cells = lines_[best].cells;
    for (std::uint32_t w : choices) {
      State t = s;
      std::vector<std::size_t> touched;
      for (std::size_t p = 0; p < cells.size(); ++p) {
        const auto v = static_cast<std::int8_t>((w >> p) & 1);
        if (t.cell[cells[p]] == kUnknown) {
          t.cell[cells[p]] = v;
          for (std::size_t other : cell_lines_[cells[p]])
            if (other != best) touched.push_back(other);
        }
      }
      t.candidates[best] = {w};
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      if (propagate(t, std::move(touched)) && !descend(std::move(t))) return false;
    }
    return true;
  }

  SolveOptions options_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::optional<BoxDims> boxes_;
  std::vector<Line> lines_;
  std::vector<std::vector<std::size_t>> cell_lines_;
  std::map<std::size_t, std::vector<std::uint32_t>> pools_;
  State root_;
  SolveStats stats_;
  const std::function<bool(const LetterGrid&)>* visit_ = nullptr;
};

}  // namespace

SolveStats for_each_solution(const Puzzle& puzzle, const SolveOptions& options,
                             const std::function<bool(const LetterGrid&)>& visit) {
  return Search(puzzle, options).run(visit);
}

SolveResult solve(const Puzzle& puzzle, const SolveOptions& options) {
  if (options.cap == 0) throw PreconditionError("solution cap must be positive");
  if (options.cap > kMaxSolutionCap)
    throw LimitError("solution cap " + std::to_string(options.cap) + " exceeds the ceiling of " +
                     std::to_string(kMaxSolutionCap));
  SolveResult result;
  result.stats = for_each_solution(puzzle, options, [&](const LetterGrid& g) {
    if (result.count == options.cap) {
      result.truncated = true;
      return false;
    }
    ++result.count;
    result.solutions.push_back(make_solution(g, puzzle.boxes));
    return true;
  });
  return result;
}

const char* to_string(Uniqueness u) noexcept {
  switch (u) {
    case Uniqueness::Zero: return "zero";
    case Uniqueness::Unique: return "unique";
    case Uniqueness::Multiple: return "multiple";
  }
  return "zero";
}

Uniqueness is_unique(const Puzzle& puzzle, SolveOptions options) {
  options.cap = 2;
  std::size_t found = 0;
  for_each_solution(puzzle, options, [&](const LetterGrid&) { return ++found < 2; });
  return found == 0 ? Uniqueness::Zero : found == 1 ? Uniqueness::Unique : Uniqueness::Multiple;
}

std::uint64_t count_full_grids(std::size_t n, std::size_t m, std::size_t max_cells) {
  if (n == 0 || m == 0) throw PreconditionError("dimensions must be positive");
  if (n * m > max_cells)
    throw LimitError("count_full_grids is limited to " + std::to_string(max_cells) + " cells");
  Puzzle empty;
  empty.cells = CellGrid(n, m, Cell::Hole);
  std::uint64_t count = 0;
  for_each_solution(empty, SolveOptions{}, [&](const LetterGrid&) {
    ++count;
    return true;
  });
  return count;
}

std::size_t scheme_star_count(std::size_t n, std::size_t m) {
  if (n < 2 || m < 2) throw PreconditionError("scheme grids need at least 2 rows and 2 columns");
  return (n - n / 2 - 1) * (m - m / 2 - 1);
}

LetterGrid scheme_grid(std::size_t n, std::size_t m, std::span<const Letter> stars) {
  const std::size_t expected = scheme_star_count(n, m);
  if (stars.size() != expected)
    throw PreconditionError("scheme grid " + std::to_string(n) + "x" + std::to_string(m) + " takes " +
                            std::to_string(expected) + " stars, got " + std::to_string(stars.size()));
  const std::size_t h = n / 2;
  const std::size_t w = m / 2;
  LetterGrid g(n, m, Letter::A);
  std::size_t next = 0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      const bool top = r < h;
      const bool left = c < w;
      if (top) {
        g(r, c) = left ? Letter::A : Letter::B;
      } else if (left) {
        g(r, c) = Letter::B;
      } else if (r == n - 1 || c == m - 1) {
        g(r, c) = Letter::A;
      } else {
        g(r, c) = stars[next++];
      }
    }
  }
  return g;
}

WildCheck wild_check(const Puzzle& puzzle, const SolveOptions& options, std::size_t max_wild) {
  if (puzzle.variant != Variant::BoxesWild)
    throw PreconditionError("wild_check expects a boxesWild puzzle");
  std::vector<std::size_t> wild;
  for (std::size_t i = 0; i < puzzle.cells.size(); ++i)
    if (puzzle.cells[i] == Cell::Wild) wild.push_back(i);
  if (wild.size() > max_wild)
    throw LimitError("puzzle has " + std::to_string(wild.size()) + " wildcards, bound is " +
                     std::to_string(max_wild));

  SolveOptions opts = options;
  opts.cap = 2;
  WildCheck out;
  std::optional<LetterGrid> reference;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << wild.size()); ++bits) {
    Puzzle assigned = puzzle;
    for (std::size_t k = 0; k < wild.size(); ++k)
      assigned.cells[wild[k]] = (bits >> k) & 1 ? Cell::B : Cell::A;
    assigned.variant = Variant::Boxes;
    const SolveResult r = solve(assigned, opts);
    if (r.count != 1) {
      out.verdict = WildVerdict::Invalid;
      out.reason = std::string(r.count == 0 ? "no completion" : "several completions") +
                   " for wildcard assignment #" + std::to_string(bits);
      return out;
    }
    const LetterGrid& g = r.solutions.front().grid;
    if (!reference) {
      reference = g;
      continue;
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (puzzle.cells[i] == Cell::Wild || g[i] == (*reference)[i]) continue;
      out.verdict = WildVerdict::Invalid;
      out.reason = "cell (" + std::to_string(i / g.cols()) + ", " + std::to_string(i % g.cols()) +
                   ") changes with wildcard assignment #" + std::to_string(bits);
      return out;
    }
  }
  out.verdict = WildVerdict::Valid;
  out.completion = reference;
  return out;
}

}  // namespace sudolyndon
