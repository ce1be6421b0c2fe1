#include "squarewar/geometry.hpp"

#include <algorithm>
#include <cstdlib>

#include "squarewar/error.hpp"

namespace squarewar {

bool Square::contains_vertex(Coord c) const {
  const auto v = vertices();
  return std::find(v.begin(), v.end(), c) != v.end();
}

std::vector<Square> squares_through(Coord at, int n) {
  std::vector<Square> out;
  for (int side = 1; side < n; ++side) {
    // Corner candidates in row-major order: the point can sit at any of the
    // four vertex roles.
    const std::array<Coord, 4> corners{{
        {at.col - side, at.row - side},
        {at.col, at.row - side},
        {at.col - side, at.row},
        {at.col, at.row},
    }};
    for (const Coord& corner : corners) {
      if (in_bounds(corner, n) && in_bounds({corner.col + side, corner.row + side}, n)) {
        out.push_back({corner, side});
      }
    }
  }
  return out;
}

std::vector<Coord> iso_right_completions(Coord a, Coord b, int n) {
  if (a == b) {
    throw Error(ErrorCode::DegenerateInput, "triangle needs two distinct points");
  }
  std::vector<Coord> out;
  auto add = [&](Coord c) {
    if (in_bounds(c, n)) out.push_back(c);
  };
  const int dc = std::abs(a.col - b.col);
  const int dr = std::abs(a.row - b.row);
  if (dr == 0) {
    // legs: the segment ab plus a vertical leg of equal length at either end
    for (Coord p : {a, b}) {
      add({p.col, p.row + dc});
      add({p.col, p.row - dc});
    }
  } else if (dc == 0) {
    for (Coord p : {a, b}) {
      add({p.col + dr, p.row});
      add({p.col - dr, p.row});
    }
  } else if (dc == dr) {
    // ab is the hypotenuse; the right angle sits at one of the two corners
    add({a.col, b.row});
    add({b.col, a.row});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool WSet::contains(Coord c) const {
  return std::binary_search(all.begin(), all.end(), c);
}

WSet build_w(Coord stone2, int n) {
  WSet w;
  w.stone2 = stone2;
  w.u_set = iso_right_completions(stone2, points::kJ11, n);
  w.v_set = iso_right_completions(stone2, points::kH11, n);
  for (Coord c : points::kWBase) {
    if (in_bounds(c, n)) w.all.push_back(c);
  }
  w.all.insert(w.all.end(), w.u_set.begin(), w.u_set.end());
  w.all.insert(w.all.end(), w.v_set.begin(), w.v_set.end());
  std::sort(w.all.begin(), w.all.end());
  w.all.erase(std::unique(w.all.begin(), w.all.end()), w.all.end());
  return w;
}

}  // namespace squarewar
