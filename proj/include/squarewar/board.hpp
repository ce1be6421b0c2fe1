#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "squarewar/coord.hpp"
#include "squarewar/geometry.hpp"

namespace squarewar {

enum class Outcome : std::uint8_t { InProgress, BlackWin, WhiteWin };

struct GameStatus {
  Outcome outcome = Outcome::InProgress;
  std::optional<Square> square;  // set iff the game is won
  int winning_stone = 0;         // 1-based stone number of the completing move

  bool in_progress() const { return outcome == Outcome::InProgress; }
};

struct Move {
  Coord at;
  Color color;
};

// Raw cell encoding shared by Board and the search.
enum Cell : std::uint8_t { kEmpty = 0, kBlack = 1, kWhite = 2 };

constexpr Cell cell_of(Color c) { return c == Color::Black ? kBlack : kWhite; }

// First square (side ascending, corner row-major) with `at` as a vertex whose
// four vertices all hold `color`.
std::optional<Square> find_completed_square(std::span<const std::uint8_t> cells,
                                            int n, Coord at, Color color);

// Empty points completing a `color` square, given the list of `color` stones
// on `cells`. Sorted row-major, no duplicates.
std::vector<Coord> find_winning_points(std::span<const std::uint8_t> cells,
                                       int n, std::span<const Coord> stones,
                                       Color color);

// Immutable game position. Every mutation returns a successor; stones are
// never removed and colors alternate starting with Black.
class Board {
 public:
  explicit Board(int n = kDefaultSize);

  // Replays a move list from the empty board (colors by alternation).
  static Board from_moves(std::span<const Coord> moves, int n = kDefaultSize);

  int size() const { return n_; }
  std::optional<Color> at(Coord c) const;
  bool is_empty(Coord c) const { return cells_[index_of(c, n_)] == kEmpty; }
  std::span<const std::uint8_t> cells() const { return cells_; }

  const std::vector<Move>& history() const { return history_; }
  int stone_count() const { return static_cast<int>(history_.size()); }
  Color to_move() const {
    return history_.size() % 2 == 0 ? Color::Black : Color::White;
  }
  const GameStatus& status() const { return status_; }

  // Throws Error{OutOfBounds | Occupied | Rule4Violation | GameOver}.
  Board place(Coord at) const;

  std::vector<Coord> stones(Color color) const;
  std::vector<Coord> empty_points() const;

  std::optional<Square> completed_square(Coord at, Color color) const;
  std::vector<Coord> winning_points(Color color) const;

  std::uint64_t hash() const;

  std::vector<Coord> move_list() const;

 private:
  int n_;
  std::vector<std::uint8_t> cells_;
  std::vector<Move> history_;
  GameStatus status_;
};

// Orthogonal neighbours at distance one.
constexpr bool orthogonally_adjacent(Coord a, Coord b) {
  const int dc = a.col > b.col ? a.col - b.col : b.col - a.col;
  const int dr = a.row > b.row ? a.row - b.row : b.row - a.row;
  return dc + dr == 1;
}

}  // namespace squarewar
