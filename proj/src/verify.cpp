#include "squarewar/verify.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "squarewar/board.hpp"
#include "squarewar/engine.hpp"
#include "squarewar/error.hpp"
#include "squarewar/geometry.hpp"
#include "squarewar/symmetry.hpp"

namespace squarewar {

namespace {

constexpr Coord kI11{8, 10};
constexpr Coord kH10{7, 9};
constexpr Coord kI9{8, 8};
constexpr Coord kJ9{9, 8};
constexpr Coord kH9{7, 8};

std::string join(const std::vector<Coord>& cs) {
  std::string out;
  for (Coord c : cs) {
    if (!out.empty()) out += ' ';
    out += format_coord(c);
  }
  return out;
}

// Tries every White reply against a fixed position without copying the
// Board for each one.
class ReplyProbe {
 public:
  explicit ReplyProbe(const Board& board)
      : n_(board.size()),
        cells_(board.cells().begin(), board.cells().end()),
        black_(board.stones(Color::Black)) {}

  // After White plays `reply`: did White complete a square, and what are
  // Black's completion points?
  bool white_completes(Coord reply) {
    cells_[index_of(reply, n_)] = kWhite;
    const bool done = find_completed_square(cells_, n_, reply, Color::White).has_value();
    cells_[index_of(reply, n_)] = kEmpty;
    return done;
  }

  bool black_can_win_after(Coord reply) {
    cells_[index_of(reply, n_)] = kWhite;
    const bool wins = !find_winning_points(cells_, n_, black_, Color::Black).empty();
    cells_[index_of(reply, n_)] = kEmpty;
    return wins;
  }

 private:
  int n_;
  std::vector<std::uint8_t> cells_;
  std::vector<Coord> black_;
};

// Every White reply other than those in `blocks` must leave Black a
// completion point. Returns the first counterexample.
std::optional<Coord> unpunished_reply(const Board& board, const std::vector<Coord>& blocks) {
  ReplyProbe probe(board);
  for (Coord reply : board.empty_points()) {
    if (std::find(blocks.begin(), blocks.end(), reply) != blocks.end()) continue;
    if (probe.white_completes(reply) || !probe.black_can_win_after(reply)) return reply;
  }
  return std::nullopt;
}

struct ScriptFailure {
  std::string what;
};

// `board`: White to move after a scripted Black stone; `expected` is the
// threat set that stone must have created.
void check_white_turn(const Board& board, const std::vector<Coord>& expected) {
  auto fail = [&](const std::string& what) {
    throw ScriptFailure{"after " + join(board.move_list()) + ": " + what};
  };
  if (!board.winning_points(Color::White).empty()) fail("White has a completion point");
  const auto threats = board.winning_points(Color::Black);
  if (threats != expected) fail("Black threats are {" + join(threats) + "}, expected {" + join(expected) + "}");
  if (auto bad = unpunished_reply(board, threats.size() == 1 ? threats : std::vector<Coord>{})) {
    fail("White reply " + format_coord(*bad) + " is not punished");
  }
}

}  // namespace

ScriptCaseResult verify_script_case(Coord stone2, Coord stone4) {
  ScriptCaseResult result;
  try {
    Board board = Board::from_moves(std::vector<Coord>{points::kCenter, stone2, points::kSecondBlack, stone4});
    const std::array<std::pair<Coord, std::vector<Coord>>, 3> steps{{
        {kI11, {points::kJ11}},
        {kH10, {points::kH11}},
        {kI9, {kH9, kJ9}},
    }};
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const auto& [move, threats] = steps[i];
      board = board.place(move);
      if (!board.status().in_progress()) throw ScriptFailure{"scripted stone ended the game early"};
      check_white_turn(board, threats);
      if (i + 1 < steps.size()) board = board.place(threats.front());
    }
    // Double threat: whichever point White takes, the other one wins.
    for (Coord block : {kJ9, kH9}) {
      const Board blocked = board.place(block);
      const Coord finish = block == kJ9 ? kH9 : kJ9;
      const Board done = blocked.place(finish);
      if (done.status().outcome != Outcome::BlackWin) {
        throw ScriptFailure{"stone 11 at " + format_coord(finish) + " did not win"};
      }
      result.win_stone = std::max(result.win_stone, done.status().winning_stone);
    }
    result.ok = result.win_stone == 11;
    if (!result.ok) result.failure = "win did not come at stone 11";
  } catch (const ScriptFailure& f) {
    result.failure = f.what;
  } catch (const Error& e) {
    result.failure = e.what();
  }
  if (!result.ok) {
    result.failure = format_coord(stone2) + "/" + format_coord(stone4) + ": " + result.failure;
  }
  return result;
}

ScriptReport verify_script_all() {
  ScriptReport report;
  constexpr int n = kDefaultSize;
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const Coord stone2{col, row};
      if (!in_canonical_domain(stone2, n)) continue;
      const WSet w = build_w(stone2);
      for (int r4 = 0; r4 < n; ++r4) {
        for (int c4 = 0; c4 < n; ++c4) {
          const Coord stone4{c4, r4};
          if (stone4 == points::kCenter || stone4 == points::kSecondBlack || stone4 == stone2) continue;
          if (w.contains(stone4)) {
            ++report.skipped_inside_w;
            continue;
          }
          ++report.cases;
          const auto r = verify_script_case(stone2, stone4);
          if (!r.ok) report.failures.push_back(r.failure);
          report.max_win_stone = std::max(report.max_win_stone, r.win_stone);
        }
      }
    }
  }
  return report;
}

namespace {

struct NodeFailure {
  std::string what;
};

class BookChecker {
 public:
  explicit BookChecker(int max_stone) : max_stone_(max_stone) {}

  // `board`: Black to move.
  void check(const Board& board, const ProofNode& node) {
    const int stone = board.stone_count() + 1;
    auto fail = [&](const std::string& what) {
      throw NodeFailure{"at stone " + std::to_string(stone) + " (" + format_coord(node.black_move) +
                        ") after " + join(board.move_list()) + ": " + what};
    };
    if (!in_bounds(node.black_move, board.size()) || !board.is_empty(node.black_move)) {
      fail("move is not playable");
    }
    std::vector<Coord> listed = node.threats;
    std::sort(listed.begin(), listed.end());
    if (std::adjacent_find(listed.begin(), listed.end()) != listed.end()) fail("duplicate threat");

    const Board after = board.place(node.black_move);
    if (after.status().outcome == Outcome::BlackWin) {
      // Immediate completion: threats are the completion points before the move.
      if (listed != board.winning_points(Color::Black)) fail("threat list does not match the position");
      if (node.win_at != stone) fail("win_at does not match the completing stone");
      if (!node.replies.empty()) fail("winning node has replies");
      check_bound(stone, fail);
      return;
    }
    if (!after.winning_points(Color::White).empty()) fail("White can complete a square");
    const auto threats = after.winning_points(Color::Black);
    if (threats.empty()) fail("move creates no threat");
    if (listed != threats) fail("threat list {" + join(listed) + "} != {" + join(threats) + "}");

    if (threats.size() >= 2) {
      if (node.win_at != stone + 2) fail("double threat must win two stones later");
      if (!node.replies.empty()) fail("double-threat node has replies");
      if (auto bad = unpunished_reply(after, {})) fail("White reply " + format_coord(*bad) + " survives");
      check_bound(stone + 2, fail);
      return;
    }
    if (node.win_at) fail("single threat cannot be a win");
    const Coord block = threats.front();
    if (node.replies.size() != 1 || node.replies.front().block != block) {
      fail("replies must be exactly the block at " + format_coord(block));
    }
    if (auto bad = unpunished_reply(after, {block})) fail("White reply " + format_coord(*bad) + " is not punished");
    check(after.place(block), node.replies.front().child);
  }

 private:
  template <typename Fail>
  void check_bound(int win_stone, Fail&& fail) {
    if (win_stone > max_stone_) fail("win beyond the book's stone bound");
  }

  int max_stone_;
};

}  // namespace

BookReport validate_book(const StrategyBook& book) {
  BookReport report;
  constexpr int n = kDefaultSize;
  if (book.meta.n != n) {
    report.failures.push_back("book is for a " + std::to_string(book.meta.n) + "x" +
                              std::to_string(book.meta.n) + " board");
    return report;
  }
  std::set<std::pair<Coord, Coord>> seen;
  for (const BookCase& c : book.cases) {
    ++report.cases;
    const std::string name = format_coord(c.stone2) + "/" + format_coord(c.stone4);
    try {
      if (!seen.insert({c.stone2, c.stone4}).second) throw NodeFailure{"duplicate case"};
      if (!in_canonical_domain(c.stone2, n)) throw NodeFailure{"stone 2 outside the canonical block"};
      if (!build_w(c.stone2).contains(c.stone4) || c.stone4 == points::kCenter ||
          c.stone4 == points::kSecondBlack) {
        throw NodeFailure{"stone 4 is not a playable W point"};
      }
      const Board start = Board::from_moves(
          std::vector<Coord>{points::kCenter, c.stone2, points::kSecondBlack, c.stone4});
      BookChecker(book.meta.max_stone).check(start, c.root);
      ++report.valid;
    } catch (const NodeFailure& f) {
      report.failures.push_back(name + ": " + f.what);
    } catch (const Error& e) {
      report.failures.push_back(name + ": " + e.what());
    }
  }
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const Coord stone2{col, row};
      if (!in_canonical_domain(stone2, n)) continue;
      for (Coord stone4 : build_w(stone2).all) {
        if (stone4 == points::kCenter || stone4 == points::kSecondBlack) continue;
        if (!seen.contains({stone2, stone4})) {
          report.missing.push_back(format_coord(stone2) + "/" + format_coord(stone4));
        }
      }
    }
  }
  return report;
}

ReplayStats replay_random(const StrategyBook& book, int games, std::uint64_t seed) {
  ReplayStats stats;
  stats.transcript_digest = 1469598103934665603ull;
  if (games <= 0) {
    stats.transcript_digest = 0;
    return stats;
  }
  auto shared = std::make_shared<const StrategyBook>(book);
  std::mt19937_64 rng(seed);
  long long stone_total = 0;
  for (int g = 0; g < games; ++g) {
    EngineSession session(shared);
    while (session.board.status().in_progress()) {
      if (session.board.to_move() == Color::Black) {
        session = engine_black_move(session).second;
      } else {
        const auto legal = legal_white_moves(session);
        std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
        session = apply_white_move(session, legal[pick(rng)]);
      }
    }
    const auto& status = session.board.status();
    ++stats.games;
    if (status.outcome == Outcome::BlackWin) ++stats.black_wins;
    stats.max_stone = std::max(stats.max_stone, status.winning_stone);
    stone_total += status.winning_stone;
    for (const Move& m : session.board.history()) {
      stats.transcript_digest ^= static_cast<std::uint64_t>(index_of(m.at, kDefaultSize) + 1);
      stats.transcript_digest *= 1099511628211ull;
    }
    stats.transcript_digest ^= 0xffu;  // game separator
    stats.transcript_digest *= 1099511628211ull;
  }
  stats.mean_stone = static_cast<double>(stone_total) / stats.games;
  return stats;
}

nlohmann::json verification_report_json(const ScriptReport* script, const BookReport* book) {
  nlohmann::json j = nlohmann::json::object();
  if (script) {
    j["script_cases"] = script->cases;
    j["script_failures"] = script->failures;
  }
  if (book) {
    j["book_cases"] = book->cases;
    j["book_failures"] = book->failures;
    j["book_missing"] = book->missing;
  }
  return j;
}

}  // namespace squarewar
