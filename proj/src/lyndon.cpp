#include "sudolyndon/lyndon.hpp"

#include "sudolyndon/errors.hpp"

#include <algorithm>

namespace sudolyndon {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax: return "syntax";
    case ParseErrorKind::Header: return "header";
    case ParseErrorKind::Dimension: return "dimension";
    case ParseErrorKind::IllegalCharacter: return "illegal-character";
    case ParseErrorKind::CountOutOfRange: return "count-out-of-range";
    case ParseErrorKind::CountMismatch: return "count-mismatch";
    case ParseErrorKind::BoxTiling: return "box-tiling";
    case ParseErrorKind::WildcardOutsideVariant: return "wildcard-outside-variant";
    case ParseErrorKind::VariantMismatch: return "variant-mismatch";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::string message, int line, int column)
    : Error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message
                     : message),
      kind_(kind),
      line_(line),
      column_(column) {}

const char* to_string(Order o) noexcept { return o == Order::ALT ? "a<b" : "b<a"; }

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw PreconditionError("a word must be nonempty");
}

Word Word::parse(std::string_view text) {
  if (text.empty()) throw ParseError(ParseErrorKind::Syntax, "empty word");
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'a': letters.push_back(Letter::A); break;
      case 'b': letters.push_back(Letter::B); break;
      default:
        throw ParseError(ParseErrorKind::IllegalCharacter,
                         "illegal character '" + std::string(1, text[i]) + "' at offset " +
                             std::to_string(i) + " in word");
    }
  }
  return Word(std::move(letters));
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(to_char(l));
  return s;
}

Word Word::swapped() const {
  std::vector<Letter> out(letters_.size());
  std::transform(letters_.begin(), letters_.end(), out.begin(), [](Letter l) { return swap(l); });
  return Word(std::move(out));
}

std::uint64_t Word::mask() const {
  if (letters_.size() > 64) throw LimitError("word too long for a 64-bit mask");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == Letter::B) m |= std::uint64_t{1} << i;
  return m;
}

Word Word::from_mask(std::uint64_t mask, std::size_t length) {
  std::vector<Letter> letters(length);
  for (std::size_t i = 0; i < length; ++i)
    letters[i] = (mask >> i) & 1 ? Letter::B : Letter::A;
  return Word(std::move(letters));
}

std::strong_ordering lex_compare(std::span<const Letter> u, std::span<const Letter> v,
                                 Order order) {
  const std::size_t common = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (u[i] != v[i]) return rank(u[i], order) <=> rank(v[i], order);
  }
  return u.size() <=> v.size();
}

// Duval: k walks the current period while j scans. A strictly smaller letter
// than the periodic one proves a smaller suffix; the word is Lyndon iff its
// period is its whole length at the end.
bool is_lyndon(std::span<const Letter> w, Order order) noexcept {
  if (w.empty()) return false;
  std::size_t k = 0;
  for (std::size_t j = 1; j < w.size(); ++j) {
    const int rk = rank(w[k], order);
    const int rj = rank(w[j], order);
    if (rk < rj) {
      k = 0;
    } else if (rk == rj) {
      ++k;
    } else {
      return false;
    }
  }
  return k == 0;
}

namespace {

// Length of the longest proper border of w (KMP failure function at |w|).
std::size_t longest_border(std::span<const Letter> w) {
  std::vector<std::size_t> fail(w.size() + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k];
    if (w[i] == w[k]) ++k;
    fail[i + 1] = k;
  }
  return w.empty() ? 0 : fail[w.size()];
}

}  // namespace

bool is_unbordered(std::span<const Letter> w) { return longest_border(w) == 0; }

bool is_primitive(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  const std::size_t period = n - longest_border(w);
  return period == n || n % period != 0;
}

namespace {

// Duval's successor: visits every Lyndon word of length <= n over {0, 1} in
// lexicographic order; `emit` receives those of length exactly n.
template <class Emit>
void fkm_lyndon(std::size_t n, Emit&& emit) {
  std::vector<int> w{-1};
  w.reserve(n);
  while (!w.empty()) {
    ++w.back();
    const std::size_t period = w.size();
    if (period == n) emit(w);
    while (w.size() < n) w.push_back(w[w.size() - period]);
    while (!w.empty() && w.back() == 1) w.pop_back();
  }
}

void check_bound(std::size_t n, std::size_t bound) {
  if (n == 0) throw PreconditionError("word length must be positive");
  if (n > bound)
    throw LimitError("Lyndon enumeration length " + std::to_string(n) + " exceeds bound " +
                     std::to_string(bound));
}

}  // namespace

std::vector<Word> enumerate_lyndon(std::size_t n, Order order, std::size_t bound) {
  check_bound(n, bound);
  const int flip = order == Order::BLT ? 1 : 0;
  std::vector<Word> out;
  fkm_lyndon(n, [&](const std::vector<int>& ranks) {
    std::vector<Letter> letters(n);
    for (std::size_t i = 0; i < n; ++i) letters[i] = static_cast<Letter>(ranks[i] ^ flip);
    out.emplace_back(std::move(letters));
  });
  return out;
}

std::vector<std::uint32_t> enumerate_lyndon_masks(std::size_t n, Order order, std::size_t bound) {
  check_bound(n, bound);
  if (n > 32) throw LimitError("mask enumeration supports lengths up to 32");
  const std::uint32_t flip = order == Order::BLT ? 1 : 0;
  std::vector<std::uint32_t> out;
  fkm_lyndon(n, [&](const std::vector<int>& ranks) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((static_cast<std::uint32_t>(ranks[i]) ^ flip) != 0) m |= std::uint32_t{1} << i;
    out.push_back(m);
  });
  return out;
}

std::uint64_t count_lyndon(std::size_t n) {
  if (n == 0) throw PreconditionError("word length must be positive");
  if (n > 62) throw LimitError("count_lyndon supports lengths up to 62");
  auto mobius = [](std::size_t d) {
    int sign = 1;
    for (std::size_t p = 2; p * p <= d; ++p) {
      if (d % p != 0) continue;
      d /= p;
      if (d % p == 0) return 0;
      sign = -sign;
    }
    if (d > 1) sign = -sign;
    return sign;
  };
  std::int64_t total = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    total += mobius(d) * (std::int64_t{1} << (n / d));
  }
  return static_cast<std::uint64_t>(total) / n;
}

}  // namespace sudolyndon
