#include "sudolyndon/text_format.hpp"

#include "sudolyndon/errors.hpp"

#include <charconv>
#include <sstream>

namespace sudolyndon {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines_.push_back(line);
      pos = end + 1;
    }
    while (!lines_.empty() && lines_.back().find_first_not_of(" \t") == std::string_view::npos)
      lines_.pop_back();
  }

  Puzzle parse() {
    std::size_t i = next_content(0);
    {
      auto toks = split(at(i));
      if (toks.size() != 2 || toks[0].text != "sudolyndon" || toks[1].text != "1")
        fail(ParseErrorKind::Header, "expected header \"sudolyndon 1\"", i, 1);
    }
    i = next_content(i + 1);
    std::size_t n = 0, m = 0;
    {
      auto toks = split(at(i));
      if (toks.empty() || toks[0].text != "size")
        fail(ParseErrorKind::Syntax, "expected \"size <n> <m>\"", i, toks.empty() ? 1 : toks[0].column);
      if (toks.size() != 3) fail(ParseErrorKind::Syntax, "size takes two integers", i, toks[0].column);
      n = positive(toks[1], i);
      m = positive(toks[2], i);
    }

    Puzzle p;
    std::size_t colcounts_line = 0;
    bool saw_forbid = false;
    for (i = next_content(i + 1);; i = next_content(i + 1)) {
      auto toks = split(at(i));
      const auto key = toks[0].text;
      if (key == "grid") {
        if (toks.size() != 1) fail(ParseErrorKind::Syntax, "unexpected text after \"grid\"", i, toks[1].column);
        break;
      }
      if (key == "boxes") {
        if (p.boxes) fail(ParseErrorKind::Syntax, "duplicate boxes directive", i, 1);
        if (toks.size() != 3) fail(ParseErrorKind::Syntax, "boxes takes two integers", i, 1);
        p.boxes = BoxDims{positive(toks[1], i), positive(toks[2], i)};
        if (n % p.boxes->rows != 0 || m % p.boxes->cols != 0)
          fail(ParseErrorKind::BoxTiling, "boxes do not tile the grid exactly", i, toks[1].column);
      } else if (key == "rowcounts" || key == "colcounts") {
        const bool rows = key == "rowcounts";
        auto& target = rows ? p.row_acounts : p.col_acounts;
        if (target) fail(ParseErrorKind::Syntax, "duplicate " + std::string(key) + " directive", i, 1);
        const std::size_t expected = rows ? n : m;
        const std::size_t max = rows ? m : n;
        if (toks.size() - 1 != expected)
          fail(ParseErrorKind::Dimension,
               std::string(key) + " needs " + std::to_string(expected) + " values, got " +
                   std::to_string(toks.size() - 1),
               i, toks[0].column);
        std::vector<int> values;
        for (std::size_t t = 1; t < toks.size(); ++t) {
          const std::size_t v = integer(toks[t], i);
          if (v > max)
            fail(ParseErrorKind::CountOutOfRange,
                 "a-count " + std::to_string(v) + " outside [0, " + std::to_string(max) + "]", i,
                 toks[t].column);
          values.push_back(static_cast<int>(v));
        }
        target = std::move(values);
        if (!rows) colcounts_line = i;
      } else if (key == "forbid") {
        if (saw_forbid) fail(ParseErrorKind::Syntax, "duplicate forbid directive", i, 1);
        if (toks.size() < 2) fail(ParseErrorKind::Syntax, "forbid needs at least one word", i, 1);
        for (std::size_t t = 1; t < toks.size(); ++t) {
          for (std::size_t k = 0; k < toks[t].text.size(); ++k)
            if (toks[t].text[k] != 'a' && toks[t].text[k] != 'b')
              fail(ParseErrorKind::IllegalCharacter, "forbidden factors are words over {a, b}", i,
                   toks[t].column + static_cast<int>(k));
          p.forbidden_factors.push_back(Word::parse(toks[t].text));
        }
        saw_forbid = true;
      } else {
        fail(ParseErrorKind::Syntax, "unknown directive \"" + std::string(key) + "\"", i, toks[0].column);
      }
    }

    p.cells = CellGrid(n, m, Cell::Hole);
    bool has_wild = false;
    std::size_t first_wild_line = 0;
    int first_wild_col = 0;
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t li = i + 1 + r;
      if (li >= lines_.size())
        fail(ParseErrorKind::Dimension,
             "grid has " + std::to_string(r) + " rows, expected " + std::to_string(n), lines_.size(), 1);
      const std::string_view row = lines_[li];
      for (std::size_t c = 0; c < row.size() && c < m; ++c) {
        auto cell = cell_from_char(row[c]);
        if (!cell)
          fail(ParseErrorKind::IllegalCharacter,
               "illegal cell character '" + std::string(1, row[c]) + "'", li, static_cast<int>(c) + 1);
        if (*cell == Cell::Wild && !has_wild) {
          has_wild = true;
          first_wild_line = li;
          first_wild_col = static_cast<int>(c) + 1;
        }
        p.cells(r, c) = *cell;
      }
      if (row.size() != m)
        fail(ParseErrorKind::Dimension,
             "grid row has " + std::to_string(row.size()) + " cells, expected " + std::to_string(m), li,
             static_cast<int>(std::min(row.size(), m)) + 1);
    }
    if (i + 1 + n < lines_.size())
      fail(ParseErrorKind::Dimension, "extra lines after the " + std::to_string(n) + "-row grid",
           i + 1 + n, 1);

    if (has_wild && !p.boxes)
      fail(ParseErrorKind::WildcardOutsideVariant,
           "wildcard '*' requires the boxes variant (add a \"boxes\" directive)", first_wild_line,
           first_wild_col);
    if (p.row_acounts && p.col_acounts) {
      int rs = 0, cs = 0;
      for (int v : *p.row_acounts) rs += v;
      for (int v : *p.col_acounts) cs += v;
      if (rs != cs)
        fail(ParseErrorKind::CountMismatch,
             "row a-counts sum to " + std::to_string(rs) + ", column a-counts to " + std::to_string(cs),
             colcounts_line, 1);
    }
    p.variant = infer_variant(p);
    return p;
  }

 private:
  [[noreturn]] void fail(ParseErrorKind kind, const std::string& message, std::size_t line_index,
                         int column) const {
    throw ParseError(kind, message, static_cast<int>(line_index) + 1, column);
  }

  std::string_view at(std::size_t i) const {
    if (i >= lines_.size())
      fail(ParseErrorKind::Syntax, "unexpected end of input", lines_.size(), 1);
    return lines_[i];
  }

  // Skips blank and comment lines.
  std::size_t next_content(std::size_t i) const {
    while (i < lines_.size()) {
      auto toks = split(lines_[i]);
      if (!toks.empty() && toks[0].text.front() != '#') return i;
      ++i;
    }
    fail(ParseErrorKind::Syntax, "unexpected end of input (missing \"grid\" section?)", lines_.size(), 1);
  }

  std::size_t integer(const Token& t, std::size_t line) const {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      fail(ParseErrorKind::Syntax, "expected a nonnegative integer, got \"" + std::string(t.text) + "\"",
           line, t.column);
    return v;
  }

  std::size_t positive(const Token& t, std::size_t line) const {
    const std::size_t v = integer(t, line);
    if (v == 0) fail(ParseErrorKind::Dimension, "dimension must be positive", line, t.column);
    return v;
  }

  std::vector<std::string_view> lines_;
};

void append_ints(std::ostringstream& out, const char* key, const std::vector<int>& values) {
  out << key;
  for (int v : values) out << ' ' << v;
  out << '\n';
}

}  // namespace

Puzzle parse_puzzle(std::string_view text) { return Parser(text).parse(); }

std::string render_puzzle(const Puzzle& p) {
  std::ostringstream out;
  out << "sudolyndon 1\n";
  out << "size " << p.rows() << ' ' << p.cols() << '\n';
  if (p.boxes) out << "boxes " << p.boxes->rows << ' ' << p.boxes->cols << '\n';
  if (p.row_acounts) append_ints(out, "rowcounts", *p.row_acounts);
  if (p.col_acounts) append_ints(out, "colcounts", *p.col_acounts);
  if (!p.forbidden_factors.empty()) {
    out << "forbid";
    for (const Word& w : p.forbidden_factors) out << ' ' << w.str();
    out << '\n';
  }
  out << "grid\n";
  for (const auto& row : to_rows(p.cells)) out << row << '\n';
  return out.str();
}

std::string render_solution(const LetterGrid& g, const Puzzle& constraints) {
  Puzzle solved = constraints;
  solved.cells = to_cells(g);
  solved.variant = infer_variant(solved);
  return render_puzzle(solved);
}

}  // namespace sudolyndon
