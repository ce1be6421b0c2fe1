#include "squarewar/tactic.hpp"

#include "squarewar/error.hpp"
#include "squarewar/geometry.hpp"
#include "squarewar/symmetry.hpp"

namespace squarewar {

namespace {

constexpr Coord kI11{8, 10};
constexpr Coord kH10{7, 9};
constexpr Coord kI9{8, 8};

}  // namespace

CaseKind classify_case(Coord stone2, Coord stone4) {
  return build_w(stone2).contains(stone4) ? CaseKind::InsideW : CaseKind::OutsideW;
}

Coord opening_move(const Board& board) {
  if (board.to_move() != Color::Black) {
    throw Error(ErrorCode::NotBlacksTurn, "White is to move");
  }
  if (board.stone_count() == 0) return points::kCenter;
  if (board.stone_count() > 2) {
    throw Error(ErrorCode::TooLate, "the opening covers stones 1 and 3 only");
  }
  const Coord stone2 = board.history()[1].at;
  const auto [frame, image] = canonicalize_reply(stone2, board.size());
  return apply_transform(inverse(frame), points::kSecondBlack, board.size());
}

std::pair<Coord, ScriptState> scripted_black_move(const Board& board,
                                                  const ScriptState& state) {
  if (board.to_move() != Color::Black || !board.status().in_progress()) {
    throw Error(ErrorCode::NotBlacksTurn, "Black cannot move now");
  }
  const auto& h = board.history();
  if (h.size() < 4 || h[0].at != points::kCenter || h[2].at != points::kSecondBlack ||
      classify_case(h[1].at, h[3].at) != CaseKind::OutsideW) {
    throw Error(ErrorCode::OutOfScript, "position is not on the scripted line");
  }

  if (const auto wins = board.winning_points(Color::Black); !wins.empty()) {
    return {wins.front(), ScriptState{ScriptStage::Done, std::nullopt}};
  }
  switch (state.stage) {
    case ScriptStage::Stone5:
      return {kI11, ScriptState{ScriptStage::Stone7, points::kJ11}};
    case ScriptStage::Stone7:
      return {kH10, ScriptState{ScriptStage::Stone9, points::kH11}};
    case ScriptStage::Stone9:
      return {kI9, ScriptState{ScriptStage::Stone11, std::nullopt}};
    case ScriptStage::Stone11:
    case ScriptStage::Done:
      break;
  }
  throw Error(ErrorCode::OutOfScript, "script exhausted without a winning point");
}

}  // namespace squarewar
