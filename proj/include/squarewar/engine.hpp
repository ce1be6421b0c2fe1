#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "squarewar/board.hpp"
#include "squarewar/book.hpp"
#include "squarewar/symmetry.hpp"
#include "squarewar/tactic.hpp"

namespace squarewar {

enum class EngineMode { Opening, Scripted, Booked, Punish, Finished };

std::string_view to_string(EngineMode mode);

// Black's side of one game. The frame is fixed once White's stone 2 is known;
// the script and the book are consulted in that frame.
struct EngineSession {
  explicit EngineSession(std::shared_ptr<const StrategyBook> book);

  std::shared_ptr<const StrategyBook> book;
  Board board;                            // actual frame
  std::optional<Symmetry> frame;          // actual -> canonical
  std::optional<Board> canonical;         // set together with frame
  EngineMode mode = EngineMode::Opening;
  std::optional<CaseKind> case_kind;      // decided at stone 5
  ScriptState script;
  const ProofNode* node = nullptr;        // last book node played
  std::optional<Coord> expected_block;    // canonical frame

  Coord to_actual(Coord canonical_point) const;
  Coord to_canonical(Coord actual_point) const;
};

// Throws Error{NotBlacksTurn | GameOver | BookMiss}.
std::pair<Coord, EngineSession> engine_black_move(const EngineSession& session);

// Applies a White move. Throws Error{NotWhitesTurn | GameOver | Occupied | OutOfBounds}.
EngineSession apply_white_move(const EngineSession& session, Coord at);

// Empty points when White is to move; empty once the game is decided.
// Throws Error{NotWhitesTurn} while Black is to move.
std::vector<Coord> legal_white_moves(const EngineSession& session);

}  // namespace squarewar
