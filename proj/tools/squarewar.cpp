// squarewar: solve, verify, play and serve the Square War first-player win.

#include <CLI11.hpp>
#include <httplib.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "squarewar/book.hpp"
#include "squarewar/engine.hpp"
#include "squarewar/error.hpp"
#include "squarewar/service.hpp"
#include "squarewar/solver.hpp"
#include "squarewar/verify.hpp"

namespace sw = squarewar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitIo = 2;

std::string book_path_or_env(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SQUAREWAR_BOOK")) return env;
  return {};
}

bool write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) return false;
  out << j.dump(2) << '\n';
  return static_cast<bool>(out);
}

// Loads the book named by flag/env, or solves one in-process when neither is
// set and `allow_solve` is true.
std::optional<sw::StrategyBook> obtain_book(const std::string& flag, bool allow_solve) {
  const std::string path = book_path_or_env(flag);
  if (path.empty()) {
    if (!allow_solve) {
      std::cerr << "error: no book given (use --book or SQUAREWAR_BOOK)\n";
      return std::nullopt;
    }
    return sw::solve_all({}).second;
  }
  try {
    return sw::load_book(path);
  } catch (const sw::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return std::nullopt;
  }
}

void print_board(const sw::Board& board, std::ostream& out) {
  const int n = board.size();
  std::string header = "   ";
  for (int col = 0; col < n; ++col) {
    header += ' ';
    header += static_cast<char>('A' + col);
  }
  out << header << '\n';
  for (int row = n - 1; row >= 0; --row) {
    out << (row + 1 < 10 ? "  " : " ") << row + 1;
    for (int col = 0; col < n; ++col) {
      const auto c = board.at({col, row});
      out << ' ' << (!c ? '.' : (*c == sw::Color::Black ? 'X' : 'O'));
    }
    out << '\n';
  }
}

int cmd_solve(const std::string& mode, int max_stone, const std::string& book_path,
              const std::string& report_path, int jobs) {
  sw::SolverConfig config;
  try {
    config.mode = sw::domain_mode_from_string(mode);
  } catch (const sw::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  config.max_stone = max_stone;
  config.jobs = jobs;
  auto [report, book] = sw::solve_all(config);

  std::cout << "C_e=" << report.c_e << " C_w=" << report.c_w << " W_a=" << (report.w_a ? "true" : "false")
            << " max_win_stone=" << report.max_win_stone << '\n';
  std::cout << "histogram";
  for (const auto& [stone, count] : report.histogram) std::cout << ' ' << stone << '=' << count;
  std::cout << '\n';
  if (config.mode == sw::DomainMode::Extended) {
    std::cout << "reflection_gap_cases=" << report.reflection_gap_cases << '\n';
  }
  for (const auto& k : report.unproved) {
    std::cout << "unproved=" << sw::format_coord(k.stone2) << '/' << sw::format_coord(k.stone4) << '\n';
  }
  std::cout << "elapsed_ms=" << report.elapsed_ms << '\n';

  if (!book_path.empty() && !sw::save_book(book, book_path)) {
    std::cerr << "error: cannot write " << book_path << '\n';
    return kExitIo;
  }
  if (!report_path.empty() && !write_json(report_path, report.to_json())) {
    std::cerr << "error: cannot write " << report_path << '\n';
    return kExitIo;
  }
  return report.w_a ? kExitOk : kExitFailed;
}

int cmd_verify_script(const std::string& report_path) {
  const auto report = sw::verify_script_all();
  for (const auto& f : report.failures) std::cout << "failure: " << f << '\n';
  std::cout << "script_cases=" << report.cases << " skipped_inside_w=" << report.skipped_inside_w
            << " max_win_stone=" << report.max_win_stone << " failures=" << report.failures.size() << '\n';
  if (!report_path.empty() && !write_json(report_path, sw::verification_report_json(&report, nullptr))) {
    return kExitIo;
  }
  return report.ok() ? kExitOk : kExitFailed;
}

int cmd_verify_book(const std::string& book_flag, const std::string& report_path) {
  auto book = obtain_book(book_flag, false);
  if (!book) return kExitIo;
  const auto report = sw::validate_book(*book);
  for (const auto& f : report.failures) std::cout << "failure: " << f << '\n';
  std::cout << report.valid << '/' << report.cases << " valid\n";
  std::cout << "book_cases=" << report.cases << " valid=" << report.valid
            << " missing=" << report.missing.size() << " failures=" << report.failures.size() << '\n';
  if (!report_path.empty() && !write_json(report_path, sw::verification_report_json(nullptr, &report))) {
    return kExitIo;
  }
  return report.ok() ? kExitOk : kExitFailed;
}

int cmd_verify_replay(const std::string& book_flag, int games, std::uint64_t seed) {
  auto book = obtain_book(book_flag, false);
  if (!book) return kExitIo;
  try {
    const auto stats = sw::replay_random(*book, games, seed);
    std::cout << "games=" << stats.games << " black_wins=" << stats.black_wins
              << " max_stone=" << stats.max_stone << " mean_stone=" << stats.mean_stone
              << " digest=" << std::hex << stats.transcript_digest << std::dec << '\n';
    return stats.black_wins == stats.games ? kExitOk : kExitFailed;
  } catch (const sw::Error& e) {
    std::cout << "failure: " << e.what() << '\n';
    return kExitFailed;
  }
}

int cmd_play(const std::string& book_flag) {
  auto book = obtain_book(book_flag, true);
  if (!book) return kExitIo;
  sw::EngineSession session(std::make_shared<const sw::StrategyBook>(std::move(*book)));
  try {
    while (session.board.status().in_progress()) {
      if (session.board.to_move() == sw::Color::Black) {
        auto [move, next] = sw::engine_black_move(session);
        session = std::move(next);
        std::cout << "black " << session.board.stone_count() << ": " << sw::format_coord(move) << '\n';
        continue;
      }
      print_board(session.board, std::cout);
      std::cout << "white " << session.board.stone_count() + 1 << "> " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) {
        std::cout << '\n';
        return kExitOk;
      }
      if (line == "quit" || line == "exit") return kExitOk;
      try {
        session = sw::apply_white_move(session, sw::parse_coord(line));
      } catch (const sw::Error& e) {
        std::cout << "error: " << e.what() << '\n';
      }
    }
  } catch (const sw::Error& e) {
    std::cerr << "engine error: " << e.what() << '\n';
    return kExitFailed;
  }
  print_board(session.board, std::cout);
  const auto& status = session.board.status();
  std::cout << (status.outcome == sw::Outcome::BlackWin ? "BLACK" : "WHITE") << " WINS with square";
  for (sw::Coord v : status.square->vertices()) std::cout << ' ' << sw::format_coord(v);
  std::cout << " at stone " << status.winning_stone << '\n';
  return kExitOk;
}

int cmd_serve(const std::string& host, int port, const std::string& book_flag, std::size_t max_games) {
  auto book = obtain_book(book_flag, true);
  if (!book) return kExitIo;
  if (const auto check = sw::validate_book(*book); !check.ok()) {
    std::cerr << "error: book failed validation: " << check.failures.front() << '\n';
    return kExitIo;
  }
  sw::GameService service(std::make_shared<const sw::StrategyBook>(std::move(*book)), max_games);
  httplib::Server server;
  sw::mount(server, service);
  if (!server.bind_to_port(host, port)) {
    std::cerr << "error: cannot bind " << host << ':' << port << '\n';
    return kExitIo;
  }
  std::cout << "listening=" << host << ':' << port << std::endl;
  server.listen_after_bind();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square War: forced-win prover and engine for the first player"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "search every stone-4-inside-W case");
  std::string mode = "paper";
  int max_stone = sw::SolverConfig{}.max_stone;
  std::string book_out;
  std::string report_out;
  int jobs = 0;
  solve->add_option("--mode", mode, "paper | extended")->check(CLI::IsMember({"paper", "extended"}));
  solve->add_option("--max-stone", max_stone, "latest stone number Black may win with");
  solve->add_option("--book", book_out, "write the strategy book (JSON)");
  solve->add_option("--report", report_out, "write the solve report (JSON)");
  solve->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  auto* verify = app.add_subcommand("verify", "independent checks");
  verify->require_subcommand(1);
  std::string verify_book_path;
  std::string verify_report;
  int games = 10000;
  std::uint64_t seed = 1;
  auto* v_script = verify->add_subcommand("script", "exhaustive check of the scripted line");
  v_script->add_option("--report", verify_report, "write a JSON verification report");
  auto* v_book = verify->add_subcommand("book", "adversarial validation of a strategy book");
  v_book->add_option("--book", verify_book_path, "book file (default: $SQUAREWAR_BOOK)");
  v_book->add_option("--report", verify_report, "write a JSON verification report");
  auto* v_replay = verify->add_subcommand("replay", "engine against a seeded random White");
  v_replay->add_option("--book", verify_book_path, "book file (default: $SQUAREWAR_BOOK)");
  v_replay->add_option("--games", games, "number of games");
  v_replay->add_option("--seed", seed, "random seed");

  auto* play = app.add_subcommand("play", "play White against the engine in the terminal");
  std::string play_book;
  play->add_option("--book", play_book, "book file (default: $SQUAREWAR_BOOK, else solve now)");

  auto* serve = app.add_subcommand("serve", "HTTP JSON API for browser play");
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string serve_book;
  std::size_t max_games = 1024;
  serve->add_option("--host", host, "bind address");
  serve->add_option("--port", port, "TCP port");
  serve->add_option("--book", serve_book, "book file (default: $SQUAREWAR_BOOK, else solve now)");
  serve->add_option("--max-games", max_games, "games kept in memory before LRU eviction");

  CLI11_PARSE(app, argc, argv);

  if (*solve) return cmd_solve(mode, max_stone, book_out, report_out, jobs);
  if (*v_script) return cmd_verify_script(verify_report);
  if (*v_book) return cmd_verify_book(verify_book_path, verify_report);
  if (*v_replay) return cmd_verify_replay(verify_book_path, games, seed);
  if (*play) return cmd_play(play_book);
  if (*serve) return cmd_serve(host, port, serve_book, max_games);
  return kExitOk;
}
