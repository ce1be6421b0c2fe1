#include <doctest.h>

#include "squarewar/engine.hpp"
#include "squarewar/error.hpp"
#include "squarewar/solver.hpp"

using namespace squarewar;

namespace {

Coord at(const char* s) { return parse_coord(s); }

std::shared_ptr<const StrategyBook> standard_book() {
  static const auto book = std::make_shared<const StrategyBook>(solve_all({}).second);
  return book;
}

EngineSession black(const EngineSession& s, Coord expected) {
  auto [move, next] = engine_black_move(s);
  CHECK(move == expected);
  return next;
}

EngineSession black(const EngineSession& s) { return engine_black_move(s).second; }

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("opening and frame") {
  EngineSession s(standard_book());
  s = black(s, at("J10"));
  CHECK(legal_white_moves(s).size() == 360);
  s = apply_white_move(s, at("A10"));
  s = black(s, at("K10"));
  REQUIRE(s.frame);
  CHECK(*s.frame == Symmetry::ReflectColumn);
  CHECK(legal_white_moves(s).size() == 358);
}

TEST_CASE("scripted game against a blocking White ends at stone 11") {
  EngineSession s(standard_book());
  s = black(s, at("J10"));
  s = apply_white_move(s, at("Q5"));
  s = black(s, at("I10"));
  s = apply_white_move(s, at("C3"));
  s = black(s, at("I11"));
  CHECK(s.mode == EngineMode::Scripted);
  CHECK(s.case_kind == CaseKind::OutsideW);
  s = apply_white_move(s, at("J11"));
  s = black(s, at("H10"));
  s = apply_white_move(s, at("H11"));
  s = black(s, at("I9"));
  s = apply_white_move(s, at("J9"));
  s = black(s, at("H9"));
  CHECK(s.mode == EngineMode::Finished);
  CHECK(s.board.status().outcome == Outcome::BlackWin);
  CHECK(s.board.status().winning_stone == 11);
  CHECK(legal_white_moves(s).empty());
}

TEST_CASE("a deviation switches to punish mode and loses at once") {
  EngineSession s(standard_book());
  s = black(s);
  s = apply_white_move(s, at("Q5"));
  s = black(s);
  s = apply_white_move(s, at("C3"));
  s = black(s, at("I11"));
  s = apply_white_move(s, at("R15"));
  CHECK(s.mode == EngineMode::Punish);
  s = black(s, at("J11"));
  CHECK(s.board.status().outcome == Outcome::BlackWin);
  CHECK(s.board.status().winning_stone == 7);
}

TEST_CASE("booked games follow the proof in the actual frame") {
  // Stone 2 on C3 is canonicalized by a rotation; stone 4 then lands in W.
  EngineSession s(standard_book());
  s = black(s);
  s = apply_white_move(s, at("C3"));
  s = black(s);
  REQUIRE(s.frame);
  const Coord stone4 = s.to_actual(at("J11"));
  s = apply_white_move(s, stone4);
  s = black(s);
  CHECK(s.mode == EngineMode::Booked);
  CHECK(s.case_kind == CaseKind::InsideW);
  while (s.board.status().in_progress()) {
    if (s.board.to_move() == Color::Black) {
      s = black(s);
      continue;
    }
    const auto threats = s.board.winning_points(Color::Black);
    REQUIRE_FALSE(threats.empty());
    REQUIRE(s.board.winning_points(Color::White).empty());
    s = apply_white_move(s, threats.front());
  }
  CHECK(s.board.status().outcome == Outcome::BlackWin);
  CHECK(s.board.status().winning_stone <= 31);

  // Canonical transcript mapped back equals the actual transcript.
  REQUIRE(s.canonical);
  const auto actual = s.board.move_list();
  const auto canonical = s.canonical->move_list();
  REQUIRE(actual.size() == canonical.size());
  for (std::size_t i = 0; i < actual.size(); ++i) CHECK(s.to_actual(canonical[i]) == actual[i]);
}

TEST_CASE("turn and book errors") {
  EngineSession s(standard_book());
  try {
    legal_white_moves(s);
    FAIL("expected NotWhitesTurn");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotWhitesTurn);
  }
  CHECK_THROWS_AS(apply_white_move(s, at("A1")), Error);
  s = black(s);
  try {
    engine_black_move(s);
    FAIL("expected NotBlacksTurn");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBlacksTurn);
  }
  CHECK_THROWS_AS(apply_white_move(s, at("J10")), Error);

  // Without a book, an inside-W case cannot be played.
  EngineSession bare(std::make_shared<const StrategyBook>());
  bare = black(bare);
  bare = apply_white_move(bare, at("Q5"));
  bare = black(bare);
  bare = apply_white_move(bare, at("J11"));
  try {
    engine_black_move(bare);
    FAIL("expected BookMiss");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BookMiss);
  }
}

TEST_CASE("every stone 2 and every stone 4 is answered") {
  // Exhaustive over the first four stones; the remaining play blocks.
  int games = 0;
  for (int i = 0; i < 361; i += 7) {
    EngineSession s(standard_book());
    s = black(s);
    const Coord two = coord_at(i, 19);
    if (!s.board.is_empty(two)) continue;
    s = apply_white_move(s, two);
    s = black(s);
    for (int k = 0; k < 361; ++k) {
      const Coord four = coord_at(k, 19);
      if (!s.board.is_empty(four)) continue;
      EngineSession g = apply_white_move(s, four);
      while (g.board.status().in_progress()) {
        if (g.board.to_move() == Color::Black) {
          g = black(g);
        } else {
          g = apply_white_move(g, g.board.winning_points(Color::Black).front());
        }
      }
      ++games;
      REQUIRE(g.board.status().outcome == Outcome::BlackWin);
      REQUIRE(g.board.status().winning_stone <= 31);
    }
  }
  CHECK(games > 0);
}

}  // TEST_SUITE
