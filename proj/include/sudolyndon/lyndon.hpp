#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sudolyndon {

enum class Letter : std::uint8_t { A = 0, B = 1 };

constexpr Letter swap(Letter l) noexcept { return l == Letter::A ? Letter::B : Letter::A; }
constexpr char to_char(Letter l) noexcept { return l == Letter::A ? 'a' : 'b'; }

/// ALT is the alphabet {a < b}, BLT is {b < a}.
enum class Order : std::uint8_t { ALT, BLT };

constexpr Order opposite(Order o) noexcept { return o == Order::ALT ? Order::BLT : Order::ALT; }

/// Rank of a letter under an order: 0 for the smaller letter, 1 for the larger.
constexpr int rank(Letter l, Order o) noexcept {
  return static_cast<int>(l) ^ (o == Order::BLT ? 1 : 0);
}

/// The smallest letter under `o`; every Lyndon word of length >= 2 starts with it.
constexpr Letter least_letter(Order o) noexcept { return o == Order::ALT ? Letter::A : Letter::B; }

/// The order under which `first` is the least letter.
constexpr Order order_starting_with(Letter first) noexcept {
  return first == Letter::A ? Order::ALT : Order::BLT;
}

const char* to_string(Order o) noexcept;

/// A nonempty sequence of letters over {a, b}.
class Word {
 public:
  explicit Word(std::vector<Letter> letters);

  /// Parses an ASCII string over {a, b}. Throws ParseError on empty input or other characters.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }

  std::string str() const;
  Word swapped() const;

  /// Bit i set iff letter i is b. Requires size() <= 64.
  std::uint64_t mask() const;
  static Word from_mask(std::uint64_t mask, std::size_t length);

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

std::strong_ordering lex_compare(std::span<const Letter> u, std::span<const Letter> v, Order order);
inline std::strong_ordering lex_compare(const Word& u, const Word& v, Order order) {
  return lex_compare(u.letters(), v.letters(), order);
}

/// Linear-time Lyndon test (Duval scan).
bool is_lyndon(std::span<const Letter> w, Order order) noexcept;
inline bool is_lyndon(const Word& w, Order order) noexcept { return is_lyndon(w.letters(), order); }

/// Lyndon test over an arbitrary totally ordered alphabet, e.g. is_lyndon_text("cocoon").
template <class T, class Less = std::less<>>
bool is_lyndon_sequence(std::span<const T> w, Less less = {}) {
  if (w.empty()) return false;
  std::size_t k = 0;
  for (std::size_t j = 1; j < w.size(); ++j) {
    if (less(w[k], w[j])) {
      k = 0;
    } else if (!less(w[j], w[k])) {
      ++k;
    } else {
      return false;
    }
  }
  return k == 0;
}

inline bool is_lyndon_text(std::string_view text) {
  return is_lyndon_sequence(std::span<const char>(text.data(), text.size()));
}

bool is_unbordered(std::span<const Letter> w);
inline bool is_unbordered(const Word& w) { return is_unbordered(w.letters()); }

bool is_primitive(std::span<const Letter> w);
inline bool is_primitive(const Word& w) { return is_primitive(w.letters()); }

inline constexpr std::size_t kDefaultEnumerationBound = 20;

/// All Lyndon words of length exactly n under `order`, in lexicographic order
/// under `order`. Throws LimitError when n exceeds `bound`.
std::vector<Word> enumerate_lyndon(std::size_t n, Order order,
                                   std::size_t bound = kDefaultEnumerationBound);

/// Same words as enumerate_lyndon, encoded as bitmasks (bit i set iff letter i is b).
std::vector<std::uint32_t> enumerate_lyndon_masks(std::size_t n, Order order,
                                                  std::size_t bound = kDefaultEnumerationBound);

/// Number of binary Lyndon words of length n under one order (Witt's formula).
/// Throws LimitError for n > 62.
std::uint64_t count_lyndon(std::size_t n);

}  // namespace sudolyndon
