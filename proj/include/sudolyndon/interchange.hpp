#pragma once

#include "sudolyndon/grid.hpp"

#include <json.hpp>

namespace sudolyndon {

/// JSON form of a puzzle. Fields: n, m, cells (n strings), variant,
/// rowACounts, colACounts, boxRows, boxCols, forbiddenFactors. Absent
/// optional constraints are serialized as null (forbiddenFactors as []).
nlohmann::json puzzle_to_json(const Puzzle& p);

/// Inverse of puzzle_to_json. "variant" may be omitted, in which case it is
/// inferred. Throws ParseError on any schema or invariant violation.
Puzzle puzzle_from_json(const nlohmann::json& j);

/// Parses a board (array of row strings) and checks it against n x m.
CellGrid cells_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols);

nlohmann::json grid_to_json(const LetterGrid& g);
nlohmann::json grid_to_json(const CellGrid& g);

/// {cells: [...], lineOrders: [{kind, index, order}]}
nlohmann::json solution_to_json(const Solution& s);

}  // namespace sudolyndon
