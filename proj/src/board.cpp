#include "squarewar/board.hpp"

#include <algorithm>

#include "squarewar/error.hpp"

namespace squarewar {

std::optional<Square> find_completed_square(std::span<const std::uint8_t> cells,
                                            int n, Coord at, Color color) {
  const std::uint8_t want = cell_of(color);
  if (cells[index_of(at, n)] != want) return std::nullopt;
  for (int side = 1; side < n; ++side) {
    const std::array<Coord, 4> corners{{
        {at.col - side, at.row - side},
        {at.col, at.row - side},
        {at.col - side, at.row},
        {at.col, at.row},
    }};
    for (const Coord& corner : corners) {
      const Square sq{corner, side};
      if (!in_bounds(corner, n) || !in_bounds({corner.col + side, corner.row + side}, n)) {
        continue;
      }
      bool full = true;
      for (const Coord& v : sq.vertices()) {
        if (cells[index_of(v, n)] != want) {
          full = false;
          break;
        }
      }
      if (full) return sq;
    }
  }
  return std::nullopt;
}

std::vector<Coord> find_winning_points(std::span<const std::uint8_t> cells,
                                       int n, std::span<const Coord> stones,
                                       Color color) {
  // A square with three own vertices always has an edge joining two of them,
  // so scanning same-line stone pairs finds every completion point.
  const std::uint8_t own = cell_of(color);
  std::vector<Coord> out;
  auto probe = [&](Coord r, Coord s) {
    if (!in_bounds(r, n) || !in_bounds(s, n)) return;
    const std::uint8_t cr = cells[index_of(r, n)];
    const std::uint8_t cs = cells[index_of(s, n)];
    if (cr == own && cs == kEmpty) out.push_back(s);
    if (cs == own && cr == kEmpty) out.push_back(r);
  };
  for (std::size_t i = 0; i < stones.size(); ++i) {
    for (std::size_t j = i + 1; j < stones.size(); ++j) {
      const Coord p = stones[i];
      const Coord q = stones[j];
      if (p.row == q.row) {
        const int d = std::abs(p.col - q.col);
        probe({p.col, p.row + d}, {q.col, q.row + d});
        probe({p.col, p.row - d}, {q.col, q.row - d});
      } else if (p.col == q.col) {
        const int d = std::abs(p.row - q.row);
        probe({p.col + d, p.row}, {q.col + d, q.row});
        probe({p.col - d, p.row}, {q.col - d, q.row});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Board::Board(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, kEmpty) {
  if (n < 2 || n > kMaxSize) {
    throw Error(ErrorCode::OutOfBounds, "unsupported board size " + std::to_string(n));
  }
}

Board Board::from_moves(std::span<const Coord> moves, int n) {
  Board b(n);
  for (Coord c : moves) b = b.place(c);
  return b;
}

std::optional<Color> Board::at(Coord c) const {
  switch (cells_[index_of(c, n_)]) {
    case kBlack: return Color::Black;
    case kWhite: return Color::White;
    default: return std::nullopt;
  }
}

Board Board::place(Coord at) const {
  if (!status_.in_progress()) {
    throw Error(ErrorCode::GameOver, "the game is already decided");
  }
  if (!in_bounds(at, n_)) {
    throw Error(ErrorCode::OutOfBounds, "point is off the board");
  }
  if (!is_empty(at)) {
    throw Error(ErrorCode::Occupied, format_coord(at) + " is occupied");
  }
  const Color color = to_move();
  if (history_.size() == 2 && !orthogonally_adjacent(history_[0].at, at)) {
    throw Error(ErrorCode::Rule4Violation,
                "Black's second stone must be adjacent to " +
                    format_coord(history_[0].at));
  }
  Board next = *this;
  next.cells_[index_of(at, n_)] = cell_of(color);
  next.history_.push_back({at, color});
  if (auto sq = find_completed_square(next.cells_, n_, at, color)) {
    next.status_.outcome = color == Color::Black ? Outcome::BlackWin : Outcome::WhiteWin;
    next.status_.square = sq;
    next.status_.winning_stone = next.stone_count();
  }
  return next;
}

std::vector<Coord> Board::stones(Color color) const {
  std::vector<Coord> out;
  for (const Move& m : history_) {
    if (m.color == color) out.push_back(m.at);
  }
  return out;
}

std::vector<Coord> Board::empty_points() const {
  std::vector<Coord> out;
  for (int i = 0; i < n_ * n_; ++i) {
    if (cells_[i] == kEmpty) out.push_back(coord_at(i, n_));
  }
  return out;
}

std::optional<Square> Board::completed_square(Coord at, Color color) const {
  return find_completed_square(cells_, n_, at, color);
}

std::vector<Coord> Board::winning_points(Color color) const {
  const auto own = stones(color);
  return find_winning_points(cells_, n_, own, color);
}

std::uint64_t Board::hash() const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (std::uint8_t c : cells_) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Coord> Board::move_list() const {
  std::vector<Coord> out;
  out.reserve(history_.size());
  for (const Move& m : history_) out.push_back(m.at);
  return out;
}

}  // namespace squarewar
