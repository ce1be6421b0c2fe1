#pragma once

#include <array>
#include <vector>

#include "squarewar/coord.hpp"

namespace squarewar {

// An axis-aligned square given by its lowest (col,row) corner and side length.
struct Square {
  Coord corner;
  int side = 1;

  std::array<Coord, 4> vertices() const {
    return {corner,
            Coord{corner.col + side, corner.row},
            Coord{corner.col, corner.row + side},
            Coord{corner.col + side, corner.row + side}};
  }

  bool contains_vertex(Coord c) const;

  friend bool operator==(const Square&, const Square&) = default;
};

// Every in-bounds axis-aligned square having `at` as a vertex, ordered by
// side ascending, then corner row-major.
std::vector<Square> squares_through(Coord at, int n = kDefaultSize);

// Points u such that {a, b, u} is an isosceles right triangle whose two legs
// run along grid lines. Occupancy is ignored. Result sorted row-major.
// Throws Error{DegenerateInput} when a == b.
std::vector<Coord> iso_right_completions(Coord a, Coord b,
                                         int n = kDefaultSize);

// Fixed points of the opening, in the frame where White's stone 2 lies in
// columns K..S, rows 1..10.
namespace points {
inline constexpr Coord kCenter{9, 9};         // J10, Black stone 1
inline constexpr Coord kSecondBlack{8, 9};    // I10, Black stone 3
inline constexpr Coord kJ11{9, 10};
inline constexpr Coord kH11{7, 10};
inline constexpr std::array<Coord, 9> kWBase{{
    {8, 10},  // I11
    {9, 10},  // J11
    {7, 9},   // H10
    {7, 10},  // H11
    {8, 8},   // I9
    {9, 8},   // J9
    {7, 8},   // H9
    {7, 12},  // H13
    {9, 12},  // J13
}};
}  // namespace points

// White stone-4 positions against which the scripted forcing line is not
// guaranteed: the nine base points plus U and V.
struct WSet {
  Coord stone2;
  std::vector<Coord> u_set;  // completions of (stone2, J11)
  std::vector<Coord> v_set;  // completions of (stone2, H11)
  std::vector<Coord> all;    // deduplicated union, row-major

  bool contains(Coord c) const;
};

WSet build_w(Coord stone2, int n = kDefaultSize);

}  // namespace squarewar
