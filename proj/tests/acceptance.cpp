// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "oracles.hpp"

#include "sudolyndon/generator.hpp"
#include "sudolyndon/hints.hpp"
#include "sudolyndon/lyndon.hpp"
#include "sudolyndon/partial_word.hpp"
#include "sudolyndon/solver.hpp"
#include "sudolyndon/text_format.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

using namespace sudolyndon;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail.str("");
    if (!pass) detail << "; ";
    pass = false;
    detail << why;
  }
};

int failures = 0;

void report(const char* name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double t = seconds_since(t0);
  if (!o.pass) ++failures;
  std::printf("%s %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", name, t, o.detail.str().c_str());
  std::fflush(stdout);
}

std::set<std::vector<std::string>> solver_set(const Puzzle& p) {
  SolveOptions o;
  o.cap = kMaxSolutionCap;
  std::set<std::vector<std::string>> out;
  for (const auto& s : solve(p, o).solutions) out.insert(to_rows(s.grid));
  return out;
}

// Word lists ---------------------------------------------------------------

void word_lists(Outcome& o) {
  const auto t0 = Clock::now();
  const std::vector<std::string> alt = {"a",     "b",     "ab",    "aab",   "abb",   "aaab",  "aabb",
                                        "abbb",  "aaaab", "aaabb", "aabab", "aabbb", "ababb", "abbbb"};
  const std::vector<std::string> blt6 = {"bbbbba", "bbbbaa", "bbbaaa", "bbbaba", "bbabaa",
                                         "bbaaba", "bbaaaa", "babaaa", "baaaaa"};
  std::vector<std::string> got;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Word& w : enumerate_lyndon(n, Order::ALT)) got.push_back(w.str());
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(got) != sorted(alt)) o.fail("a<b words of length <= 5 differ");
  std::vector<std::string> got6;
  for (const Word& w : enumerate_lyndon(6, Order::BLT)) got6.push_back(w.str());
  if (sorted(got6) != sorted(blt6)) o.fail("b<a words of length 6 differ");
  if (count_lyndon(5) != 6) o.fail("count_lyndon(5) = " + std::to_string(count_lyndon(5)));
  const double t = seconds_since(t0);
  if (t >= 1.0) o.fail("took " + std::to_string(t) + " s");
  if (o.pass)
    o.detail << got.size() << " a<b words, " << got6.size() << " b<a words of length 6, count_lyndon(5) = 6";
}

// Fixtures -----------------------------------------------------------------

void fixtures(Outcome& o) {
  const auto four = solve(oracle::fixture("example_4x4.sl"));
  const auto printed = oracle::fixture("example_4x4_solution.sl");
  if (four.count != 1 || four.solutions.empty() || to_cells(four.solutions[0].grid) != printed.cells)
    o.fail("4x4: expected the printed solution");
  if (const auto none = solve(oracle::fixture("nosolution.sl")); none.count != 0)
    o.fail("no-solution grid: count " + std::to_string(none.count));
  if (const auto p1 = solve(oracle::fixture("puzzle1.sl")); p1.count != 1)
    o.fail("Puzzle 1: count " + std::to_string(p1.count));
  const auto t0 = Clock::now();
  const auto p2 = solve(oracle::fixture("puzzle2.sl"));
  const double t2 = seconds_since(t0);
  if (p2.count != 1) o.fail("Puzzle 2: count " + std::to_string(p2.count));
  if (t2 >= 10.0) o.fail("Puzzle 2 took " + std::to_string(t2) + " s");
  if (o.pass) o.detail << "4x4 = 1 (printed grid), no-solution = 0, Puzzle 1 = 1, Puzzle 2 = 1 in " << t2 << " s";
}

// Oracle equivalence -------------------------------------------------------

void oracle_equivalence(Outcome& o) {
  std::size_t instances = 0, mismatches = 0;
  auto compare = [&](const Puzzle& p) {
    ++instances;
    if (solver_set(p) != oracle::brute_solutions(p)) {
      if (++mismatches == 1) o.fail("mismatch on\n" + render_puzzle(p));
    }
  };
  // every clue pattern over {a, b, hole}
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 4; ++m) {
      if (n * m > 8) continue;
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < n * m; ++i) total *= 3;
      for (std::uint64_t code = 0; code < total; ++code) {
        Puzzle p;
        p.cells = CellGrid(n, m, Cell::Hole);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < n * m; ++i, c /= 3) p.cells[i] = c % 3 == 0 ? Cell::Hole : c % 3 == 1 ? Cell::A : Cell::B;
        compare(p);
      }
    }
  const std::size_t exhaustive = instances;
  // random 4x4, some with counts, boxes or forbidden factors
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < 1000; ++t) {
    Puzzle p;
    p.cells = CellGrid(4, 4, Cell::Hole);
    const unsigned density = 1 + rng() % 5;  // clue probability density/8
    for (std::size_t i = 0; i < 16; ++i)
      if (rng() % 8 < density) p.cells[i] = rng() & 1 ? Cell::B : Cell::A;
    switch (t % 4) {
      case 1: {
        std::vector<int> rows(4), cols(4);
        for (std::size_t r = 0; r < 4; ++r)
          for (std::size_t c = 0; c < 4; ++c)
            if (rng() & 1) ++rows[r], ++cols[c];
        p.row_acounts = rows;
        p.col_acounts = cols;
        break;
      }
      case 2:
        p.boxes = BoxDims{2, 2};
        break;
      case 3:
        p.forbidden_factors = {Word::parse(rng() & 1 ? "aaa" : "bab")};
        break;
      default:
        break;
    }
    p.variant = infer_variant(p);
    compare(p);
  }
  if (o.pass)
    o.detail << instances << " instances (" << exhaustive << " exhaustive up to 8 cells, 1000 random 4x4), 0 mismatches";
  else
    o.detail << "; " << mismatches << " mismatches in " << instances;
}

// Scheme -------------------------------------------------------------------

void scheme(Outcome& o) {
  std::size_t grids = 0;
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t m = 2; m <= 6; ++m) {
      const std::size_t stars = scheme_star_count(n, m);
      Puzzle blank;
      blank.cells = CellGrid(n, m, Cell::Hole);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << stars); ++bits) {
        ++grids;
        if (!check_grid(scheme_grid(n, m, oracle::letters(bits, stars)), blank).pass)
          o.fail("scheme " + std::to_string(n) + "x" + std::to_string(m) + " fails check_grid");
      }
      const std::size_t exponent = (n / 2 - 1) * (m / 2 - 1);
      const std::uint64_t count = count_full_grids(n, m);
      if (count < (std::uint64_t{1} << exponent))
        o.fail("count_full_grids(" + std::to_string(n) + "," + std::to_string(m) + ") below bound");
    }
  const std::uint64_t brute = oracle::count_full_grids(4, 4);
  if (count_full_grids(4, 4) != brute) o.fail("count_full_grids(4,4) differs from brute force");
  if (o.pass)
    o.detail << grids << " scheme grids valid; bound holds for 2..6; count(4,4) = " << brute
             << " = brute force; count(6,6) = " << count_full_grids(6, 6);
}

// Family -------------------------------------------------------------------

// Independent prefix-pruned search for a<b Lyndon completions. A prefix w[0..k)
// is dropped once some suffix start i has w[i..k) strictly below w[0..k-i).
struct PrunedSearch {
  std::vector<int> pattern;  // 0 = a, 1 = b, -1 = hole
  std::vector<int> w;
  std::vector<std::string> found;
  std::uint64_t nodes = 0;
  std::uint64_t node_limit;

  bool prefix_ok() const {
    const std::size_t k = w.size();
    for (std::size_t i = 1; i < k; ++i) {
      for (std::size_t j = 0; i + j < k; ++j) {
        if (w[i + j] != w[j]) {
          if (w[i + j] < w[j]) return false;
          break;
        }
      }
    }
    return true;
  }
  void run() {
    if (++nodes > node_limit || found.size() > 1) return;
    if (w.size() == pattern.size()) {
      std::vector<Letter> l;
      for (int x : w) l.push_back(x ? Letter::B : Letter::A);
      if (oracle::is_lyndon(l, Order::ALT)) found.push_back(oracle::str(l));
      return;
    }
    const int fixed = pattern[w.size()];
    for (int x = 0; x <= 1; ++x) {
      if (fixed >= 0 && fixed != x) continue;
      w.push_back(x);
      if (prefix_ok()) run();
      w.pop_back();
    }
  }
};

void family(Outcome& o) {
  const auto t0 = Clock::now();
  for (std::size_t p = 1; p <= 3; ++p) {
    const PartialWord pw = family_partial_word(p);
    const std::string expect = family_solution(p).str();
    const std::string tag = "p=" + std::to_string(p) + ": ";
    if (pw.size() != 2 * p * p + 7 * p + 5) o.fail(tag + "length " + std::to_string(pw.size()));
    if (pw.known_count() != 2 * p + 2) o.fail(tag + "known letters " + std::to_string(pw.known_count()));
    if (p <= 2) {
      const auto all = oracle::completions(pw, Order::ALT);
      if (all != std::set<std::string>{expect}) o.fail(tag + "brute force found " + std::to_string(all.size()));
      o.detail << tag << "brute force over 2^" << pw.hole_count() << "; ";
    } else {
      PrunedSearch s;
      for (std::size_t i = 0; i < pw.size(); ++i) s.pattern.push_back(pw[i] ? (*pw[i] == Letter::B) : -1);
      s.node_limit = std::uint64_t{1} << 26;
      s.run();
      if (s.nodes > s.node_limit) o.fail(tag + "pruned search exceeded 2^26 nodes");
      else if (s.found != std::vector<std::string>{expect}) o.fail(tag + "pruned search disagrees");
      o.detail << tag << "pruned search, " << s.nodes << " nodes; ";
    }
    const auto lib = completions_to_lyndon(pw, Order::ALT, 2, 64);
    if (lib.words.size() != 1 || lib.words[0].str() != expect) o.fail(tag + "library completion differs");
  }
  const double t = seconds_since(t0);
  if (t >= 60.0) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail << "unique a<b completion equals the closed form";
}

// Rules --------------------------------------------------------------------

void rules(Outcome& o) {
  std::uint64_t patterns = 0, deductions = 0, violations = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    std::string s(n, '?');
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= 3) s[i] = "?ab"[c % 3];
      ++patterns;
      const PartialWord pw = PartialWord::parse(s);
      const auto named = apply_named_rules(pw);
      if (named.empty()) continue;
      auto all = oracle::completions(pw, Order::ALT);
      const auto blt = oracle::completions(pw, Order::BLT);
      all.insert(blt.begin(), blt.end());
      std::map<std::size_t, char> forced_by_all;
      if (!all.empty())
        for (std::size_t i : pw.holes()) {
          const char first = all.begin()->at(i);
          if (std::all_of(all.begin(), all.end(), [&](const std::string& w) { return w[i] == first; }))
            forced_by_all[i] = first;
        }
      const auto inter = deduce_by_candidates(pw);
      std::map<std::size_t, char> lib_inter;
      for (const auto& d : inter)
        for (const auto& f : d.forced) lib_inter[f.position] = to_char(f.letter);
      if (lib_inter != forced_by_all && ++violations == 1) o.fail("intersection differs on " + s);
      for (const auto& d : named)
        for (const auto& f : d.forced) {
          ++deductions;
          if (pw[f.position]) {
            if (++violations == 1) o.fail(std::string(rule_id(d.rule)) + " overwrote a letter on " + s);
            continue;
          }
          if (all.empty()) continue;  // no completion to contradict
          const auto it = forced_by_all.find(f.position);
          if ((it == forced_by_all.end() || it->second != to_char(f.letter)) && ++violations == 1)
            o.fail(std::string(rule_id(d.rule)) + " unsound on " + s);
        }
    }
  }
  if (o.pass) o.detail << patterns << " patterns, " << deductions << " named deductions, 0 violations";
  else o.detail << "; " << violations << " violations";
}

// Generator ----------------------------------------------------------------

void generator(Outcome& o) {
  std::size_t runs = 0;
  std::set<std::vector<std::string>> distinct4;
  std::size_t clues5 = 0;
  for (std::size_t dim : {4, 5}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      GenConfig c;
      c.rows = c.cols = dim;
      c.seed = seed;
      c.minimize = true;
      const Generated g = generate(c);
      ++runs;
      const std::string tag = std::to_string(dim) + "x" + std::to_string(dim) + " seed " + std::to_string(seed);
      if (is_unique(g.puzzle) != Uniqueness::Unique) o.fail(tag + " not unique");
      if (!is_minimal(g.puzzle).minimal) o.fail(tag + " not minimal");
      if (render_puzzle(generate(c).puzzle) != render_puzzle(g.puzzle)) o.fail(tag + " not reproducible");
      c.minimize = false;
      if (is_unique(generate(c).puzzle) != Uniqueness::Unique) o.fail(tag + " without minimize not unique");
      if (dim == 4) distinct4.insert(to_rows(g.solution.grid));
      else clues5 += g.puzzle.clue_count();
    }
  }
  if (distinct4.size() < 2) o.fail("4x4 seeds produced a single solution");
  if (o.pass)
    o.detail << runs << " runs unique and 1-minimal, byte-identical reruns, " << distinct4.size()
             << " distinct 4x4 solutions, mean 5x5 clues " << static_cast<double>(clues5) / 100;
}

// f_min --------------------------------------------------------------------

constexpr std::size_t kFmin3x3 = 4;

void fmin_values(Outcome& o) {
  const auto f22 = f_min_exhaustive(2, 2);
  const auto f11 = f_min_exhaustive(1, 1);
  const auto f33 = f_min_exhaustive(3, 3);
  if (f22.value != 1) o.fail("f(2,2) = " + std::to_string(f22.value));
  if (f11.value != 1) o.fail("f(1,1) = " + std::to_string(f11.value));
  if (f33.value != kFmin3x3) o.fail("f(3,3) = " + std::to_string(f33.value));
  // zero clues never suffice: every full grid has a distinct swapped partner
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 1; m <= 6; ++m) {
      const auto c = count_full_grids(n, m);
      if (c < 2 || c % 2) o.fail("empty " + std::to_string(n) + "x" + std::to_string(m) + " has " + std::to_string(c));
    }
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 3; ++m)
      if (f_min_exhaustive(n, m).value < 1) o.fail("f below 1");
  if (o.pass) o.detail << "f(1,1) = 1, f(2,2) = 1, f(3,3) = " << f33.value << ", empty grids never unique up to 6x6";
}

// Linear-time check --------------------------------------------------------

double time_check(std::size_t n) {
  std::vector<Letter> stars(scheme_star_count(n, n));
  std::mt19937_64 rng(n);
  for (auto& s : stars) s = rng() & 1 ? Letter::B : Letter::A;
  const LetterGrid g = scheme_grid(n, n, stars);
  Puzzle p;
  p.cells = CellGrid(n, n, Cell::Hole);
  double best = 1e9;
  for (int rep = 0; rep < 5; ++rep) {
    const auto t0 = Clock::now();
    const bool pass = check_grid(g, p).pass;
    best = std::min(best, seconds_since(t0));
    if (!pass) return -1;
  }
  return best;
}

void linear_check(Outcome& o) {
  const std::size_t sizes[] = {1000, 1414, 2000};  // cells roughly 1M, 2M, 4M
  double t[3];
  for (int i = 0; i < 3; ++i) {
    t[i] = time_check(sizes[i]);
    if (t[i] < 0) o.fail("scheme grid " + std::to_string(sizes[i]) + " rejected");
  }
  if (!o.pass) return;
  if (t[0] >= 1.0) o.fail("1000x1000 took " + std::to_string(t[0]) + " s");
  const double cells[] = {1e6, 1414.0 * 1414.0, 4e6};
  for (int i = 1; i < 3; ++i) {
    // normalize to an exact doubling of the cell count
    const double ratio = (t[i] / t[i - 1]) / (cells[i] / cells[i - 1] / 2.0);
    if (ratio > 2.5) o.fail("time ratio " + std::to_string(ratio) + " at step " + std::to_string(i));
  }
  o.detail << "1000x1000 in " << t[0] * 1000 << " ms; 2M cells " << t[1] * 1000 << " ms; 4M cells " << t[2] * 1000
           << " ms";
}

}  // namespace

int main() {
  report("word-lists", word_lists);
  report("fixtures", fixtures);
  report("oracle-equivalence", oracle_equivalence);
  report("scheme", scheme);
  report("family", family);
  report("rule-soundness", rules);
  report("generator", generator);
  report("fmin", fmin_values);
  report("linear-check", linear_check);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures ? 1 : 0;
}
