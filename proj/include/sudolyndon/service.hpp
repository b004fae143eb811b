#pragma once

#include "sudolyndon/grid.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace sudolyndon::service {

struct Response {
  int status = 200;
  nlohmann::json body;
};

struct ServiceConfig {
  std::chrono::seconds ttl{24 * 60 * 60};
  /// Search-node budget for POST /solve; exceeding it answers 429.
  std::uint64_t solve_node_budget = 5'000'000;
  std::size_t max_solve_cap = 1000;
  std::size_t max_generate_dim = 9;
  std::string cors_origin = "*";
};

struct StoredPuzzle {
  std::string id;
  Puzzle puzzle;
  Solution solution;  // only ever sent by /reveal
  std::chrono::system_clock::time_point created_at;
};

/// Request handling for the /api/v1 endpoints, independent of the transport.
/// Engine calls are pure; the store is the only shared state.
class PuzzleService {
 public:
  using Clock = std::function<std::chrono::system_clock::time_point()>;

  explicit PuzzleService(ServiceConfig config = {}, Clock clock = {});

  /// Routes one request. `path` excludes the query string.
  Response handle(std::string_view method, std::string_view path, std::string_view body);

  Response create_puzzle(const nlohmann::json& request);
  Response get_puzzle(const std::string& id);
  Response check(const std::string& id, const nlohmann::json& request);
  Response hint(const std::string& id, const nlohmann::json& request);
  Response reveal(const std::string& id);
  Response solve(const nlohmann::json& request);

  /// Stores an already-built puzzle/solution pair and returns its id.
  std::string store(Puzzle puzzle, Solution solution);
  std::size_t evict_expired();
  std::size_t size() const;

  const ServiceConfig& config() const noexcept { return config_; }

 private:
  std::shared_ptr<const StoredPuzzle> find(const std::string& id) const;
  std::string new_id();

  ServiceConfig config_;
  Clock clock_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<const StoredPuzzle>> puzzles_;
  std::mutex id_mutex_;
  std::uint64_t id_state_;
};

/// Registers the HTTP routes (plus /healthz and CORS preflight) on `server`.
void install_routes(httplib::Server& server, PuzzleService& service);

/// Blocks serving HTTP on host:port. Returns false if the socket could not be bound.
bool serve(PuzzleService& service, const std::string& host, int port);

}  // namespace sudolyndon::service
