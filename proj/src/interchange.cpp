#include "sudolyndon/interchange.hpp"

#include "sudolyndon/errors.hpp"

namespace sudolyndon {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& message) {
  throw ParseError(ParseErrorKind::Syntax, message);
}

std::size_t positive_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() <= 0)
    schema_error(std::string("field \"") + key + "\" must be a positive integer");
  return j[key].get<std::size_t>();
}

std::optional<std::vector<int>> counts_field(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_array()) schema_error(std::string("field \"") + key + "\" must be an array");
  std::vector<int> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) schema_error(std::string("field \"") + key + "\" must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json puzzle_to_json(const Puzzle& p) {
  json j;
  j["n"] = p.rows();
  j["m"] = p.cols();
  j["cells"] = grid_to_json(p.cells);
  j["variant"] = to_string(p.variant);
  j["rowACounts"] = p.row_acounts ? json(*p.row_acounts) : json(nullptr);
  j["colACounts"] = p.col_acounts ? json(*p.col_acounts) : json(nullptr);
  j["boxRows"] = p.boxes ? json(p.boxes->rows) : json(nullptr);
  j["boxCols"] = p.boxes ? json(p.boxes->cols) : json(nullptr);
  j["forbiddenFactors"] = json::array();
  for (const Word& w : p.forbidden_factors) j["forbiddenFactors"].push_back(w.str());
  return j;
}

Puzzle puzzle_from_json(const json& j) {
  if (!j.is_object()) schema_error("puzzle must be a JSON object");
  const std::size_t n = positive_field(j, "n");
  const std::size_t m = positive_field(j, "m");
  Puzzle p;
  if (!j.contains("cells")) schema_error("field \"cells\" is required");
  p.cells = cells_from_json(j["cells"], n, m);
  p.row_acounts = counts_field(j, "rowACounts");
  p.col_acounts = counts_field(j, "colACounts");
  const bool has_br = j.contains("boxRows") && !j["boxRows"].is_null();
  const bool has_bc = j.contains("boxCols") && !j["boxCols"].is_null();
  if (has_br != has_bc) schema_error("boxRows and boxCols must be given together");
  if (has_br) p.boxes = BoxDims{positive_field(j, "boxRows"), positive_field(j, "boxCols")};
  if (j.contains("forbiddenFactors") && !j["forbiddenFactors"].is_null()) {
    if (!j["forbiddenFactors"].is_array()) schema_error("field \"forbiddenFactors\" must be an array");
    for (const auto& w : j["forbiddenFactors"]) {
      if (!w.is_string()) schema_error("forbidden factors must be strings");
      p.forbidden_factors.push_back(Word::parse(w.get<std::string>()));
    }
  }
  if (j.contains("variant") && !j["variant"].is_null()) {
    if (!j["variant"].is_string()) schema_error("field \"variant\" must be a string");
    auto v = variant_from_string(j["variant"].get<std::string>());
    if (!v) schema_error("unknown variant \"" + j["variant"].get<std::string>() + "\"");
    p.variant = *v;
  } else {
    p.variant = infer_variant(p);
  }
  validate(p);
  return p;
}

CellGrid cells_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) schema_error("cells must be an array of row strings");
  if (j.size() != rows)
    throw ParseError(ParseErrorKind::Dimension,
                     "cells has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  std::vector<std::string> lines;
  for (const auto& row : j) {
    if (!row.is_string()) schema_error("cells must be an array of row strings");
    lines.push_back(row.get<std::string>());
  }
  CellGrid g = cell_grid_from_rows(lines);
  if (g.cols() != cols)
    throw ParseError(ParseErrorKind::Dimension,
                     "rows have " + std::to_string(g.cols()) + " cells, expected " + std::to_string(cols));
  return g;
}

json grid_to_json(const LetterGrid& g) { return to_rows(g); }
json grid_to_json(const CellGrid& g) { return to_rows(g); }

json solution_to_json(const Solution& s) {
  json orders = json::array();
  for (const auto& [ref, order] : s.line_orders)
    orders.push_back({{"kind", to_string(ref.kind)}, {"index", ref.index}, {"order", to_string(order)}});
  return {{"cells", grid_to_json(s.grid)}, {"lineOrders", orders}};
}

}  // namespace sudolyndon
