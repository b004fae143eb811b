#pragma once

#include "sudolyndon/lyndon.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sudolyndon {

/// A word with holes. Holes render as '?'.
class PartialWord {
 public:
  explicit PartialWord(std::vector<std::optional<Letter>> cells);
  PartialWord(const Word& w);  // NOLINT: a word is a partial word without holes

  /// Parses ASCII over {a, b, ?}.
  static PartialWord parse(std::string_view text);

  std::size_t size() const noexcept { return cells_.size(); }
  const std::optional<Letter>& operator[](std::size_t i) const noexcept { return cells_[i]; }
  const std::vector<std::optional<Letter>>& cells() const noexcept { return cells_; }

  std::vector<std::size_t> holes() const;
  std::size_t hole_count() const noexcept;
  std::size_t known_count() const noexcept { return size() - hole_count(); }

  /// The underlying word when there are no holes.
  std::optional<Word> to_word() const;
  bool matches(const Word& w) const;
  PartialWord swapped() const;
  std::string str() const;

  friend bool operator==(const PartialWord&, const PartialWord&) = default;

 private:
  std::vector<std::optional<Letter>> cells_;
};

inline constexpr std::size_t kDefaultHoleBound = 24;

struct Completions {
  std::vector<Word> words;
  bool truncated = false;
};

/// Every way (up to `limit`) of filling the holes of `pw` so the result is
/// Lyndon under `order`. Holes are filled smaller-letter first with the
/// leftmost hole most significant, so results come out in lexicographic
/// order under `order`. Throws LimitError when pw has more than `hole_bound` holes.
Completions completions_to_lyndon(const PartialWord& pw, Order order, std::size_t limit,
                                  std::size_t hole_bound = kDefaultHoleBound);

struct CompletionExists {
  bool alt = false;
  bool blt = false;
  friend bool operator==(const CompletionExists&, const CompletionExists&) = default;
};

CompletionExists has_lyndon_completion(const PartialWord& pw,
                                       std::size_t hole_bound = kDefaultHoleBound);

/// ab^p ? a ?^(2p+2) [a ?^(2p+3)]^p: length 2p^2+7p+5 with 2p+2 known letters.
PartialWord family_partial_word(std::size_t p);

/// ab^(p+1) a b^(2p+2) [a b^(2p+3)]^p, the unique a<b completion of family_partial_word(p).
Word family_solution(std::size_t p);

}  // namespace sudolyndon
