#include "sudolyndon/partial_word.hpp"

#include "sudolyndon/errors.hpp"

#include <algorithm>

namespace sudolyndon {

PartialWord::PartialWord(std::vector<std::optional<Letter>> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw PreconditionError("a partial word must be nonempty");
}

PartialWord::PartialWord(const Word& w) {
  cells_.reserve(w.size());
  for (Letter l : w.letters()) cells_.emplace_back(l);
}

PartialWord PartialWord::parse(std::string_view text) {
  if (text.empty()) throw ParseError(ParseErrorKind::Syntax, "empty partial word");
  std::vector<std::optional<Letter>> cells;
  cells.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'a': cells.emplace_back(Letter::A); break;
      case 'b': cells.emplace_back(Letter::B); break;
      case '?': cells.emplace_back(std::nullopt); break;
      default:
        throw ParseError(ParseErrorKind::IllegalCharacter,
                         "illegal character '" + std::string(1, text[i]) + "' at offset " +
                             std::to_string(i) + " in partial word");
    }
  }
  return PartialWord(std::move(cells));
}

std::vector<std::size_t> PartialWord::holes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (!cells_[i]) out.push_back(i);
  return out;
}

std::size_t PartialWord::hole_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [](const auto& c) { return !c; }));
}

std::optional<Word> PartialWord::to_word() const {
  std::vector<Letter> letters;
  letters.reserve(cells_.size());
  for (const auto& c : cells_) {
    if (!c) return std::nullopt;
    letters.push_back(*c);
  }
  return Word(std::move(letters));
}

bool PartialWord::matches(const Word& w) const {
  if (w.size() != cells_.size()) return false;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i] && *cells_[i] != w[i]) return false;
  return true;
}

PartialWord PartialWord::swapped() const {
  std::vector<std::optional<Letter>> out;
  out.reserve(cells_.size());
  for (const auto& c : cells_) out.push_back(c ? std::optional(swap(*c)) : std::nullopt);
  return PartialWord(std::move(out));
}

std::string PartialWord::str() const {
  std::string s;
  s.reserve(cells_.size());
  for (const auto& c : cells_) s.push_back(c ? to_char(*c) : '?');
  return s;
}

namespace {

// Depth-first fill carrying the incremental Duval state (k = position in the
// current period). A letter smaller than its periodic counterpart exposes a
// suffix smaller than the word whatever follows, so the branch is cut.
class CompletionSearch {
 public:
  CompletionSearch(const PartialWord& pw, Order order, std::size_t limit)
      : pw_(pw), order_(order), limit_(limit), letters_(pw.size()) {}

  Completions run() {
    extend(0, 0);
    return std::move(out_);
  }

 private:
  // Returns false once the limit is hit and the search must stop.
  bool extend(std::size_t j, std::size_t k) {
    if (j == pw_.size()) {
      if (k != 0) return true;
      if (out_.words.size() == limit_) {
        out_.truncated = true;
        return false;
      }
      out_.words.emplace_back(letters_);
      return true;
    }
    const auto& cell = pw_[j];
    const Letter smaller = least_letter(order_);
    for (Letter l : {smaller, swap(smaller)}) {
      if (cell && *cell != l) continue;
      letters_[j] = l;
      std::size_t next_k;
      if (j == 0) {
        next_k = 0;
      } else {
        const int rk = rank(letters_[k], order_);
        const int rj = rank(l, order_);
        if (rk > rj) continue;
        next_k = rk < rj ? 0 : k + 1;
      }
      if (!extend(j + 1, next_k)) return false;
    }
    return true;
  }

  const PartialWord& pw_;
  Order order_;
  std::size_t limit_;
  std::vector<Letter> letters_;
  Completions out_;
};

void check_holes(const PartialWord& pw, std::size_t hole_bound) {
  const std::size_t holes = pw.hole_count();
  if (holes > hole_bound)
    throw LimitError("partial word has " + std::to_string(holes) + " holes, bound is " +
                     std::to_string(hole_bound));
}

}  // namespace

Completions completions_to_lyndon(const PartialWord& pw, Order order, std::size_t limit,
                                  std::size_t hole_bound) {
  if (limit == 0) throw PreconditionError("completion limit must be positive");
  check_holes(pw, hole_bound);
  return CompletionSearch(pw, order, limit).run();
}

CompletionExists has_lyndon_completion(const PartialWord& pw, std::size_t hole_bound) {
  check_holes(pw, hole_bound);
  return {
      !CompletionSearch(pw, Order::ALT, 1).run().words.empty(),
      !CompletionSearch(pw, Order::BLT, 1).run().words.empty(),
  };
}

PartialWord family_partial_word(std::size_t p) {
  if (p == 0) throw PreconditionError("family parameter p must be at least 1");
  std::vector<std::optional<Letter>> cells;
  auto put = [&](std::optional<Letter> c, std::size_t times) { cells.insert(cells.end(), times, c); };
  put(Letter::A, 1);
  put(Letter::B, p);
  put(std::nullopt, 1);
  put(Letter::A, 1);
  put(std::nullopt, 2 * p + 2);
  for (std::size_t i = 0; i < p; ++i) {
    put(Letter::A, 1);
    put(std::nullopt, 2 * p + 3);
  }
  return PartialWord(std::move(cells));
}

Word family_solution(std::size_t p) {
  if (p == 0) throw PreconditionError("family parameter p must be at least 1");
  std::vector<Letter> letters;
  auto put = [&](Letter l, std::size_t times) { letters.insert(letters.end(), times, l); };
  put(Letter::A, 1);
  put(Letter::B, p + 1);
  put(Letter::A, 1);
  put(Letter::B, 2 * p + 2);
  for (std::size_t i = 0; i < p; ++i) {
    put(Letter::A, 1);
    put(Letter::B, 2 * p + 3);
  }
  return Word(std::move(letters));
}

}  // namespace sudolyndon
