#include "squarewar/service.hpp"

#include <httplib.h>

#include <iomanip>
#include <sstream>

#include "squarewar/error.hpp"
#include "squarewar/geometry.hpp"

namespace squarewar {

using nlohmann::json;

GameResource::GameResource(std::string game_id, EngineSession s)
    : id(std::move(game_id)),
      session(std::move(s)),
      created(std::chrono::system_clock::now()),
      updated(created) {}

namespace {

json coord_list(const std::vector<Coord>& cs) {
  json out = json::array();
  for (Coord c : cs) out.push_back(format_coord(c));
  return out;
}

ApiResponse error_response(int status, std::string_view reason, const std::string& message) {
  return {status, json{{"error", reason}, {"message", message}}};
}

std::int64_t epoch_ms(std::chrono::system_clock::time_point t) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(t.time_since_epoch()).count();
}

}  // namespace

json game_state_json(const GameResource& game) {
  const EngineSession& s = game.session;
  const Board& board = s.board;
  json rows = json::array();
  for (int row = 0; row < board.size(); ++row) {
    std::string line;
    for (int col = 0; col < board.size(); ++col) {
      const auto c = board.at({col, row});
      line += !c ? '.' : (*c == Color::Black ? 'B' : 'W');
    }
    rows.push_back(std::move(line));
  }
  const GameStatus& st = board.status();
  std::string status = "in_progress";
  if (st.outcome == Outcome::BlackWin) status = "black_win";
  if (st.outcome == Outcome::WhiteWin) status = "white_win";
  std::string case_name = "pending";
  if (s.case_kind) case_name = *s.case_kind == CaseKind::OutsideW ? "outside_w" : "inside_w";

  json winning = nullptr;
  if (st.square) {
    const auto v = st.square->vertices();
    winning = coord_list({v.begin(), v.end()});
  }
  return json{
      {"id", game.id},
      {"board", std::move(rows)},
      {"history", coord_list(board.move_list())},
      {"status", status},
      {"to_move", st.in_progress() ? json(to_string(board.to_move())) : json(nullptr)},
      {"black_threats", coord_list(board.winning_points(Color::Black))},
      {"white_threats", coord_list(board.winning_points(Color::White))},
      {"case", case_name},
      {"frame", s.frame ? json(to_string(*s.frame)) : json(nullptr)},
      {"mode", to_string(s.mode)},
      {"engine_move", game.last_engine_move ? json(format_coord(*game.last_engine_move)) : json(nullptr)},
      {"winning_square", std::move(winning)},
      {"winning_stone", st.in_progress() ? json(nullptr) : json(st.winning_stone)},
      {"created_ms", epoch_ms(game.created)},
      {"updated_ms", epoch_ms(game.updated)},
  };
}

GameService::GameService(std::shared_ptr<const StrategyBook> book, std::size_t max_games)
    : book_(std::move(book)), max_games_(std::max<std::size_t>(max_games, 1)), id_rng_(std::random_device{}()) {}

std::string GameService::fresh_id() {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << id_rng_();
  return out.str();
}

std::shared_ptr<GameResource> GameService::lookup(const std::string& id) {
  std::lock_guard lock(table_mutex_);
  auto it = games_.find(id);
  if (it == games_.end()) return nullptr;
  recency_.splice(recency_.begin(), recency_, it->second.second);
  return it->second.first;
}

std::size_t GameService::game_count() const {
  std::lock_guard lock(table_mutex_);
  return games_.size();
}

ApiResponse GameService::create_game() {
  EngineSession session(book_);
  auto [move, next] = engine_black_move(session);
  std::shared_ptr<GameResource> game;
  {
    std::lock_guard lock(table_mutex_);
    std::string id;
    do {
      id = fresh_id();
    } while (games_.contains(id));
    game = std::make_shared<GameResource>(id, std::move(next));
    game->last_engine_move = move;
    recency_.push_front(id);
    games_.emplace(id, std::pair{game, recency_.begin()});
    while (games_.size() > max_games_) {
      games_.erase(recency_.back());
      recency_.pop_back();
    }
  }
  std::lock_guard lock(game->mutex);
  return {201, game_state_json(*game)};
}

ApiResponse GameService::get_game(const std::string& id) {
  auto game = lookup(id);
  if (!game) return error_response(404, "unknown_game", "no game with id " + id);
  std::lock_guard lock(game->mutex);
  return {200, game_state_json(*game)};
}

ApiResponse GameService::post_move(const std::string& id, const std::string& body) {
  auto game = lookup(id);
  if (!game) return error_response(404, "unknown_game", "no game with id " + id);

  json parsed = json::parse(body, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object() || !parsed.contains("coord") ||
      !parsed["coord"].is_string()) {
    return error_response(400, "malformed_body", R"(expected {"coord":"K9"})");
  }

  std::lock_guard lock(game->mutex);
  EngineSession& session = game->session;
  if (!session.board.status().in_progress()) {
    return error_response(409, "game_over", "the game is already decided");
  }
  if (session.board.to_move() != Color::White) {
    return error_response(409, "not_whites_turn", "Black is to move");
  }
  Coord at;
  try {
    at = parse_coord(parsed["coord"].get<std::string>(), session.board.size());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedInput) return error_response(400, "malformed_body", e.what());
    return error_response(422, "out_of_bounds", e.what());
  }
  try {
    EngineSession next = apply_white_move(session, at);
    std::optional<Coord> reply;
    if (next.board.status().in_progress()) {
      auto [move, after] = engine_black_move(next);
      reply = move;
      next = std::move(after);
    }
    session = std::move(next);
    game->last_engine_move = reply;
    game->updated = std::chrono::system_clock::now();
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::Occupied:
      case ErrorCode::OutOfBounds:
        return error_response(422, to_string(e.code()), e.what());
      case ErrorCode::GameOver:
      case ErrorCode::NotWhitesTurn:
        return error_response(409, to_string(e.code()), e.what());
      default:
        return error_response(500, to_string(e.code()), e.what());
    }
  }
  return {200, game_state_json(*game)};
}

ApiResponse GameService::delete_game(const std::string& id) {
  std::lock_guard lock(table_mutex_);
  auto it = games_.find(id);
  if (it == games_.end()) return error_response(404, "unknown_game", "no game with id " + id);
  recency_.erase(it->second.second);
  games_.erase(it);
  return {200, json{{"deleted", id}}};
}

ApiResponse GameService::health() const {
  return {200, json{{"status", "ok"}, {"book_cases", book_ ? book_->cases.size() : 0}}};
}

void mount(httplib::Server& server, GameService& service) {
  server.set_default_headers({
      {"Access-Control-Allow-Origin", "*"},
      {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
  });
  auto send = [](httplib::Response& res, const ApiResponse& api) {
    res.status = api.status;
    res.set_content(api.body.dump(), "application/json");
  };
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.Get("/health", [&service, send](const httplib::Request&, httplib::Response& res) {
    send(res, service.health());
  });
  server.Post("/games", [&service, send](const httplib::Request&, httplib::Response& res) {
    send(res, service.create_game());
  });
  server.Get(R"(/games/([0-9a-f]+))", [&service, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.get_game(req.matches[1]));
  });
  server.Delete(R"(/games/([0-9a-f]+))", [&service, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.delete_game(req.matches[1]));
  });
  server.Post(R"(/games/([0-9a-f]+)/moves)", [&service, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.post_move(req.matches[1], req.body));
  });
}

}  // namespace squarewar
