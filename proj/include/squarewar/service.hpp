#pragma once

#include <chrono>
#include <cstddef>
#include <list>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>

#include <json.hpp>

#include "squarewar/book.hpp"
#include "squarewar/engine.hpp"

namespace httplib {
class Server;
}

namespace squarewar {

struct GameResource {
  std::string id;
  EngineSession session;
  std::optional<Coord> last_engine_move;
  std::chrono::system_clock::time_point created;
  std::chrono::system_clock::time_point updated;
  std::mutex mutex;  // serializes requests on this game

  GameResource(std::string game_id, EngineSession s);
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

// Transport-independent game API; mount() wires it to HTTP routes.
class GameService {
 public:
  explicit GameService(std::shared_ptr<const StrategyBook> book, std::size_t max_games = 1024);

  ApiResponse create_game();
  ApiResponse get_game(const std::string& id);
  ApiResponse post_move(const std::string& id, const std::string& body);
  ApiResponse delete_game(const std::string& id);
  ApiResponse health() const;

  std::size_t game_count() const;

 private:
  std::shared_ptr<GameResource> lookup(const std::string& id);
  std::string fresh_id();

  std::shared_ptr<const StrategyBook> book_;
  std::size_t max_games_;
  mutable std::mutex table_mutex_;
  std::list<std::string> recency_;  // front = most recently used
  std::unordered_map<std::string,
                     std::pair<std::shared_ptr<GameResource>, std::list<std::string>::iterator>>
      games_;
  std::mt19937_64 id_rng_;
};

// Full state document for one game.
nlohmann::json game_state_json(const GameResource& game);

void mount(httplib::Server& server, GameService& service);

}  // namespace squarewar
