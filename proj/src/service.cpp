#include "sudolyndon/service.hpp"

#include "sudolyndon/errors.hpp"
#include "sudolyndon/generator.hpp"
#include "sudolyndon/hints.hpp"
#include "sudolyndon/interchange.hpp"
#include "sudolyndon/solver.hpp"

#include <httplib.h>

#include <cstdio>
#include <random>

namespace sudolyndon::service {

using nlohmann::json;

namespace {

constexpr std::string_view kPrefix = "/api/v1";

Response error(int status, const std::string& message) { return {status, {{"error", message}}}; }

json line_json(const LineRef& ref) { return {{"kind", to_string(ref.kind)}, {"index", ref.index}}; }

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (pos < path.size()) {
    if (path[pos] == '/') {
      ++pos;
      continue;
    }
    const std::size_t end = std::min(path.find('/', pos), path.size());
    parts.push_back(path.substr(pos, end - pos));
    pos = end;
  }
  return parts;
}

// Board from {cells: [...]}; 400 on malformed input, 422 on clue conflicts.
std::variant<CellGrid, Response> read_board(const Puzzle& p, const json& request) {
  if (!request.is_object() || !request.contains("cells")) return error(400, "body must contain \"cells\"");
  CellGrid board;
  try {
    board = cells_from_json(request["cells"], p.rows(), p.cols());
  } catch (const ParseError& e) {
    return error(400, e.what());
  }
  if (!consistent_with_clues(p, board)) return error(422, "board contradicts the puzzle's clues");
  return board;
}

}  // namespace

PuzzleService::PuzzleService(ServiceConfig config, Clock clock)
    : config_(std::move(config)),
      clock_(clock ? std::move(clock) : Clock([] { return std::chrono::system_clock::now(); })),
      id_state_(std::random_device{}()) {
  id_state_ = (id_state_ << 32) ^ std::random_device{}();
}

std::string PuzzleService::new_id() {
  std::lock_guard lock(id_mutex_);
  std::mt19937_64 engine(id_state_);
  id_state_ = engine();
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(engine()));
  return buf;
}

std::string PuzzleService::store(Puzzle puzzle, Solution solution) {
  evict_expired();
  auto entry = std::make_shared<StoredPuzzle>();
  entry->puzzle = std::move(puzzle);
  entry->solution = std::move(solution);
  entry->created_at = clock_();
  std::unique_lock lock(mutex_);
  do {
    entry->id = new_id();
  } while (puzzles_.count(entry->id));
  puzzles_.emplace(entry->id, entry);
  return entry->id;
}

std::size_t PuzzleService::evict_expired() {
  const auto now = clock_();
  std::unique_lock lock(mutex_);
  return std::erase_if(puzzles_, [&](const auto& kv) { return now - kv.second->created_at >= config_.ttl; });
}

std::size_t PuzzleService::size() const {
  std::shared_lock lock(mutex_);
  return puzzles_.size();
}

std::shared_ptr<const StoredPuzzle> PuzzleService::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = puzzles_.find(id);
  if (it == puzzles_.end() || clock_() - it->second->created_at >= config_.ttl) return nullptr;
  return it->second;
}

Response PuzzleService::create_puzzle(const json& request) {
  if (!request.is_object()) return error(400, "body must be a JSON object");
  if (request.contains("puzzle")) {
    // a ready-made puzzle; reveal hands out the first solution when several exist
    Puzzle p;
    try {
      p = puzzle_from_json(request["puzzle"]);
      if (p.rows() > config_.max_generate_dim || p.cols() > config_.max_generate_dim)
        return error(400, "dimensions must lie in [1, " + std::to_string(config_.max_generate_dim) + "]");
      SolveOptions options;
      options.node_budget = config_.solve_node_budget;
      const SolveResult r = sudolyndon::solve(p, options);
      if (r.count == 0) return error(422, "puzzle has no solution");
      json puzzle = puzzle_to_json(p);
      Solution s = r.solutions[0];
      const std::string id = store(std::move(p), std::move(s));
      return {201, {{"id", id}, {"puzzle", puzzle}, {"unique", r.count == 1}}};
    } catch (const BudgetExceeded& e) {
      return error(429, e.what());
    } catch (const Error& e) {
      return error(400, e.what());
    }
  }
  GenConfig config;
  try {
    for (const char* key : {"n", "m"})
      if (!request.contains(key) || !request[key].is_number_integer())
        return error(400, std::string("field \"") + key + "\" must be an integer");
    const auto n = request["n"].get<long long>();
    const auto m = request["m"].get<long long>();
    const auto limit = static_cast<long long>(config_.max_generate_dim);
    if (n < 1 || m < 1 || n > limit || m > limit)
      return error(400, "dimensions must lie in [1, " + std::to_string(limit) + "]");
    config.rows = static_cast<std::size_t>(n);
    config.cols = static_cast<std::size_t>(m);
    if (request.contains("variant") && !request["variant"].is_null()) {
      auto v = request["variant"].is_string() ? variant_from_string(request["variant"].get<std::string>())
                                              : std::nullopt;
      if (!v) return error(400, "unknown variant");
      config.variant = *v;
    }
    if (request.contains("seed") && !request["seed"].is_null()) {
      if (!request["seed"].is_number_unsigned()) return error(400, "seed must be a nonnegative integer");
      config.seed = request["seed"].get<std::uint64_t>();
    } else {
      config.seed = std::random_device{}();
    }
    if (request.contains("boxRows") && request.contains("boxCols") && !request["boxRows"].is_null()) {
      if (!request["boxRows"].is_number_unsigned() || !request["boxCols"].is_number_unsigned())
        return error(400, "box dimensions must be positive integers");
      config.boxes = BoxDims{request["boxRows"].get<std::size_t>(), request["boxCols"].get<std::size_t>()};
      if (config.boxes->rows == 0 || config.boxes->cols == 0 || config.rows % config.boxes->rows ||
          config.cols % config.boxes->cols)
        return error(400, "boxes must tile the grid exactly");
    }
    config.minimize = true;
    Generated g = generate(config);
    json puzzle = puzzle_to_json(g.puzzle);
    const std::string id = store(std::move(g.puzzle), std::move(g.solution));
    return {201, {{"id", id}, {"puzzle", puzzle}}};
  } catch (const Error& e) {
    return error(400, e.what());
  }
}

Response PuzzleService::get_puzzle(const std::string& id) {
  auto entry = find(id);
  if (!entry) return error(404, "unknown puzzle id");
  return {200, {{"id", id}, {"puzzle", puzzle_to_json(entry->puzzle)}}};
}

Response PuzzleService::check(const std::string& id, const json& request) {
  auto entry = find(id);
  if (!entry) return error(404, "unknown puzzle id");
  const Puzzle& p = entry->puzzle;
  auto board = read_board(p, request);
  if (auto* r = std::get_if<Response>(&board)) return *r;
  const CellGrid& cells = std::get<CellGrid>(board);

  json lines = json::array();
  bool solved = true;
  std::vector<Cell> content;
  for (const LineRef& ref : all_lines(p)) {
    content = extract_line(cells, ref, p.boxes);
    std::string status;
    if (!std::all_of(content.begin(), content.end(), is_letter)) {
      status = "incomplete";
    } else {
      std::vector<Letter> w;
      for (Cell c : content) w.push_back(to_letter(c));
      LineStatus s = line_status(w);
      if (!p.forbidden_factors.empty() && contains_any_factor(w, p.forbidden_factors)) s = LineStatus::Invalid;
      const std::optional<std::vector<int>>* counts = ref.kind == LineKind::Row   ? &p.row_acounts
                                                      : ref.kind == LineKind::Col ? &p.col_acounts
                                                                                  : nullptr;
      if (counts && *counts &&
          std::count(w.begin(), w.end(), Letter::A) != (**counts)[ref.index])
        s = LineStatus::Invalid;
      status = to_string(s);
    }
    solved &= status == "altValid" || status == "bltValid";
    json line = line_json(ref);
    line["status"] = status;
    lines.push_back(std::move(line));
  }
  return {200, {{"lines", lines}, {"solved", solved}}};
}

Response PuzzleService::hint(const std::string& id, const json& request) {
  auto entry = find(id);
  if (!entry) return error(404, "unknown puzzle id");
  auto board = read_board(entry->puzzle, request);
  if (auto* r = std::get_if<Response>(&board)) return *r;
  const HintResult result = next_hint(entry->puzzle, std::get<CellGrid>(board));
  if (std::holds_alternative<Exhausted>(result)) return {200, {{"status", "exhausted"}}};
  if (const auto* c = std::get_if<Contradiction>(&result))
    return {200, {{"status", "contradiction"}, {"line", line_json(c->line)}, {"explanation", c->explanation}}};
  const Hint& h = std::get<Hint>(result);
  json assignments = json::array();
  for (const CellAssignment& a : h.assignments)
    assignments.push_back({{"row", a.row}, {"col", a.col}, {"letter", std::string(1, to_char(a.letter))}});
  return {200,
          {{"rule", rule_id(h.rule)},
           {"line", line_json(h.line)},
           {"assignments", assignments},
           {"explanation", h.explanation}}};
}

Response PuzzleService::reveal(const std::string& id) {
  auto entry = find(id);
  if (!entry) return error(404, "unknown puzzle id");
  return {200, {{"solution", solution_to_json(entry->solution)}}};
}

Response PuzzleService::solve(const json& request) {
  if (!request.is_object() || !request.contains("puzzle")) return error(400, "body must contain \"puzzle\"");
  std::size_t cap = 2;
  if (request.contains("cap") && !request["cap"].is_null()) {
    if (!request["cap"].is_number_unsigned() || request["cap"].get<std::uint64_t>() == 0)
      return error(400, "cap must be a positive integer");
    if (request["cap"].get<std::uint64_t>() > config_.max_solve_cap)
      return error(400, "cap exceeds " + std::to_string(config_.max_solve_cap));
    cap = request["cap"].get<std::size_t>();
  }
  Puzzle p;
  try {
    p = puzzle_from_json(request["puzzle"]);
  } catch (const Error& e) {
    return error(400, e.what());
  }
  SolveOptions options;
  options.cap = cap;
  options.node_budget = config_.solve_node_budget;
  try {
    const SolveResult r = sudolyndon::solve(p, options);
    json solutions = json::array();
    for (const Solution& s : r.solutions) solutions.push_back(solution_to_json(s));
    return {200, {{"count", r.count}, {"truncated", r.truncated}, {"solutions", solutions}}};
  } catch (const BudgetExceeded& e) {
    return error(429, e.what());
  } catch (const Error& e) {
    return error(400, e.what());
  }
}

Response PuzzleService::handle(std::string_view method, std::string_view path, std::string_view body) {
  if (path == "/healthz") {
    if (method != "GET") return error(405, "method not allowed");
    return {200, {{"status", "ok"}}};
  }
  if (path.substr(0, kPrefix.size()) != kPrefix) return error(404, "not found");
  const auto parts = split_path(path.substr(kPrefix.size()));

  json request;
  if (method == "POST") {
    if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) {
      request = json::object();
    } else {
      request = json::parse(body, nullptr, false);
      if (request.is_discarded()) return error(400, "body is not valid JSON");
    }
  }

  if (parts.size() == 1 && parts[0] == "solve") {
    return method == "POST" ? solve(request) : error(405, "method not allowed");
  }
  if (parts.empty() || parts[0] != "puzzles") return error(404, "not found");
  if (parts.size() == 1) return method == "POST" ? create_puzzle(request) : error(405, "method not allowed");
  const std::string id(parts[1]);
  if (parts.size() == 2) return method == "GET" ? get_puzzle(id) : error(405, "method not allowed");
  if (parts.size() == 3) {
    if (method != "POST") return error(405, "method not allowed");
    if (parts[2] == "check") return check(id, request);
    if (parts[2] == "hint") return hint(id, request);
    if (parts[2] == "reveal") return reveal(id);
  }
  return error(404, "not found");
}

void install_routes(httplib::Server& server, PuzzleService& service) {
  auto dispatch = [&service](const httplib::Request& req, httplib::Response& res) {
    const Response r = service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", service.config().cors_origin);
    res.set_content(r.body.dump(), "application/json");
  };
  server.Get(".*", dispatch);
  server.Post(".*", dispatch);
  server.Options(".*", [&service](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
    res.set_header("Access-Control-Allow-Origin", service.config().cors_origin);
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });
}

bool serve(PuzzleService& service, const std::string& host, int port) {
  httplib::Server server;
  install_routes(server, service);
  return server.listen(host, port);
}

}  // namespace sudolyndon::service
