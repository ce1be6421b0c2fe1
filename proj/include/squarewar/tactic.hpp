#pragma once

#include <optional>
#include <utility>

#include "squarewar/board.hpp"
#include "squarewar/coord.hpp"

namespace squarewar {

enum class CaseKind { OutsideW, InsideW };

// Whether White's stone 4 falls in W for the given stone 2 (both in the
// canonical frame).
CaseKind classify_case(Coord stone2, Coord stone4);

// Black's stones 1 and 3 under the tactic: the center, then I10 in the
// canonical frame of White's reply (mapped back to the board's frame).
// Throws Error{NotBlacksTurn | TooLate}.
Coord opening_move(const Board& board);

enum class ScriptStage { Stone5, Stone7, Stone9, Stone11, Done };

struct ScriptState {
  ScriptStage stage = ScriptStage::Stone5;
  std::optional<Coord> expected_block;  // the one point White must take

  friend bool operator==(const ScriptState&, const ScriptState&) = default;
};

// One step of the forcing line I11, H10, I9 followed by the double threat
// J9/H9. Any immediate Black win is taken first (row-major), which covers
// White failing to block. `board` must be in the canonical frame.
// Throws Error{OutOfScript | NotBlacksTurn}.
std::pair<Coord, ScriptState> scripted_black_move(const Board& board,
                                                  const ScriptState& state);

}  // namespace squarewar
