#include "squarewar/engine.hpp"

#include "squarewar/error.hpp"
#include "squarewar/geometry.hpp"

namespace squarewar {

std::string_view to_string(EngineMode mode) {
  switch (mode) {
    case EngineMode::Opening: return "opening";
    case EngineMode::Scripted: return "scripted";
    case EngineMode::Booked: return "booked";
    case EngineMode::Punish: return "punish";
    case EngineMode::Finished: return "finished";
  }
  return "opening";
}

EngineSession::EngineSession(std::shared_ptr<const StrategyBook> b)
    : book(std::move(b)), board(kDefaultSize) {}

Coord EngineSession::to_actual(Coord c) const {
  return frame ? apply_transform(inverse(*frame), c, board.size()) : c;
}

Coord EngineSession::to_canonical(Coord c) const {
  return frame ? apply_transform(*frame, c, board.size()) : c;
}

namespace {

void play_black(EngineSession& s, Coord actual) {
  s.board = s.board.place(actual);
  if (s.canonical) s.canonical = s.canonical->place(s.to_canonical(actual));
  if (!s.board.status().in_progress()) s.mode = EngineMode::Finished;
}

[[noreturn]] void book_miss(const std::string& what) {
  throw Error(ErrorCode::BookMiss, what);
}

}  // namespace

std::pair<Coord, EngineSession> engine_black_move(const EngineSession& session) {
  if (!session.board.status().in_progress()) {
    throw Error(ErrorCode::GameOver, "the game is already decided");
  }
  if (session.board.to_move() != Color::Black) {
    throw Error(ErrorCode::NotBlacksTurn, "White is to move");
  }
  EngineSession next = session;
  const Board& board = session.board;
  const int stone = board.stone_count() + 1;

  if (const auto wins = board.winning_points(Color::Black); !wins.empty()) {
    play_black(next, wins.front());
    return {wins.front(), std::move(next)};
  }

  if (stone == 1 || stone == 3) {
    if (stone == 3) {
      if (board.history()[0].at != points::kCenter) {
        book_miss("position was not reached by the tactic");
      }
      const auto [frame, image] = canonicalize_reply(board.history()[1].at, board.size());
      next.frame = frame;
      std::vector<Coord> mapped;
      for (const Move& m : board.history()) mapped.push_back(apply_transform(frame, m.at, board.size()));
      next.canonical = Board::from_moves(mapped, board.size());
    }
    const Coord move = opening_move(board);
    play_black(next, move);
    return {move, std::move(next)};
  }

  if (!next.canonical) book_miss("position was not reached by the tactic");
  const auto& ch = next.canonical->history();

  if (stone == 5) {
    if (ch[0].at != points::kCenter || ch[2].at != points::kSecondBlack) {
      book_miss("position was not reached by the tactic");
    }
    const Coord stone2 = ch[1].at;
    const Coord stone4 = ch[3].at;
    next.case_kind = classify_case(stone2, stone4);
    if (*next.case_kind == CaseKind::OutsideW) {
      next.mode = EngineMode::Scripted;
    } else {
      next.mode = EngineMode::Booked;
      if (!next.book) book_miss("no strategy book loaded");
      next.node = next.book->find(stone2, stone4);
      if (!next.node) {
        book_miss("case " + format_coord(stone2) + "/" + format_coord(stone4) + " is not in the book");
      }
    }
  } else if (next.mode == EngineMode::Booked) {
    const Coord reply = ch.back().at;
    const ProofNode* child = next.node ? next.node->child(reply) : nullptr;
    if (!child) book_miss("no book continuation after " + format_coord(reply));
    next.node = child;
  }

  Coord canonical_move;
  if (next.mode == EngineMode::Scripted) {
    auto [move, state] = scripted_black_move(*next.canonical, next.script);
    canonical_move = move;
    next.script = state;
    next.expected_block = state.expected_block;
  } else if (next.mode == EngineMode::Booked) {
    canonical_move = next.node->black_move;
    next.expected_block = next.node->threats.size() == 1 && !next.node->win_at
                              ? std::optional<Coord>(next.node->threats.front())
                              : std::nullopt;
  } else {
    book_miss("no winning point although White left the forced line");
  }
  const Coord move = next.to_actual(canonical_move);
  play_black(next, move);
  return {move, std::move(next)};
}

EngineSession apply_white_move(const EngineSession& session, Coord at) {
  if (!session.board.status().in_progress()) {
    throw Error(ErrorCode::GameOver, "the game is already decided");
  }
  if (session.board.to_move() != Color::White) {
    throw Error(ErrorCode::NotWhitesTurn, "Black is to move");
  }
  EngineSession next = session;
  next.board = session.board.place(at);
  if (next.canonical) {
    const Coord c = next.to_canonical(at);
    next.canonical = next.canonical->place(c);
    if (next.expected_block && c != *next.expected_block &&
        (next.mode == EngineMode::Scripted || next.mode == EngineMode::Booked)) {
      next.mode = EngineMode::Punish;
    }
  }
  if (!next.board.status().in_progress()) next.mode = EngineMode::Finished;
  return next;
}

std::vector<Coord> legal_white_moves(const EngineSession& session) {
  if (!session.board.status().in_progress()) return {};
  if (session.board.to_move() != Color::White) {
    throw Error(ErrorCode::NotWhitesTurn, "Black is to move");
  }
  return session.board.empty_points();
}

}  // namespace squarewar
