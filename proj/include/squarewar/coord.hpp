#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace squarewar {

constexpr int kDefaultSize = 19;
constexpr int kMaxSize = 25;  // one letter per column, A..Y

enum class Color : std::uint8_t { Black, White };

constexpr Color opponent(Color c) {
  return c == Color::Black ? Color::White : Color::Black;
}

std::string_view to_string(Color c);

// A board intersection. Columns are letters (A = 0), rows are numbers
// ("1" = 0). Ordering is row-major: row first, then column.
struct Coord {
  int col = 0;
  int row = 0;

  friend constexpr bool operator==(const Coord&, const Coord&) = default;
  friend constexpr std::strong_ordering operator<=>(const Coord& a,
                                                    const Coord& b) {
    if (auto c = a.row <=> b.row; c != 0) return c;
    return a.col <=> b.col;
  }
};

constexpr bool in_bounds(Coord c, int n) {
  return c.col >= 0 && c.col < n && c.row >= 0 && c.row < n;
}

constexpr int index_of(Coord c, int n) { return c.row * n + c.col; }
constexpr Coord coord_at(int index, int n) { return {index % n, index / n}; }

// Parses "<letter><number>", e.g. "J10". The letter is case-insensitive.
// Throws Error{InvalidColumn | InvalidRow | MalformedInput}.
Coord parse_coord(std::string_view text, int n = kDefaultSize);

std::string format_coord(Coord c);

}  // namespace squarewar

template <>
struct std::hash<squarewar::Coord> {
  std::size_t operator()(const squarewar::Coord& c) const noexcept {
    return static_cast<std::size_t>(c.row) * 131u + static_cast<std::size_t>(c.col);
  }
};
