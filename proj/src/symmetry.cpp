#include "squarewar/symmetry.hpp"

#include "squarewar/error.hpp"

namespace squarewar {

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Identity: return "identity";
    case Symmetry::ReflectColumn: return "reflect-column";
    case Symmetry::ReflectRow: return "reflect-row";
    case Symmetry::Rotate180: return "rotate-180";
    case Symmetry::MainDiagonal: return "main-diagonal";
    case Symmetry::AntiDiagonal: return "anti-diagonal";
    case Symmetry::Rotate90: return "rotate-90";
    case Symmetry::Rotate270: return "rotate-270";
  }
  return "identity";
}

Symmetry symmetry_from_string(std::string_view name) {
  for (Symmetry s : kAllSymmetries) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorCode::MalformedInput, "unknown symmetry '" + std::string(name) + "'");
}

Coord apply_transform(Symmetry s, Coord c, int n) {
  const int m = n - 1;
  switch (s) {
    case Symmetry::Identity: return c;
    case Symmetry::ReflectColumn: return {m - c.col, c.row};
    case Symmetry::ReflectRow: return {c.col, m - c.row};
    case Symmetry::Rotate180: return {m - c.col, m - c.row};
    case Symmetry::MainDiagonal: return {c.row, c.col};
    case Symmetry::AntiDiagonal: return {m - c.row, m - c.col};
    case Symmetry::Rotate90: return {m - c.row, c.col};
    case Symmetry::Rotate270: return {c.row, m - c.col};
  }
  return c;
}

Symmetry inverse(Symmetry s) {
  switch (s) {
    case Symmetry::Rotate90: return Symmetry::Rotate270;
    case Symmetry::Rotate270: return Symmetry::Rotate90;
    default: return s;  // reflections and the half-turn are involutions
  }
}

Symmetry compose(Symmetry a, Symmetry b) {
  // Identify the composite by its action on two points that pin down the
  // whole group element.
  constexpr int n = 5;
  const Coord p{1, 0};
  const Coord q{0, 2};
  const Coord pa = apply_transform(a, apply_transform(b, p, n), n);
  const Coord qa = apply_transform(a, apply_transform(b, q, n), n);
  for (Symmetry s : kAllSymmetries) {
    if (apply_transform(s, p, n) == pa && apply_transform(s, q, n) == qa) return s;
  }
  return Symmetry::Identity;  // unreachable: the group is closed
}

bool in_canonical_domain(Coord c, int n) {
  const int center = n / 2;
  return in_bounds(c, n) && c.col > center && c.row <= center;
}

std::pair<Symmetry, Coord> canonicalize_reply(Coord stone2, int n) {
  const Coord center{n / 2, n / 2};
  if (stone2 == center) {
    throw Error(ErrorCode::CenterNotCanonicalizable,
                "the center is fixed by every symmetry");
  }
  if (!in_bounds(stone2, n)) {
    throw Error(ErrorCode::OutOfBounds, format_coord(stone2) + " is off the board");
  }
  for (Symmetry s : kAllSymmetries) {
    const Coord image = apply_transform(s, stone2, n);
    if (in_canonical_domain(image, n)) return {s, image};
  }
  // Every non-center orbit meets the domain; see the canonicalize tests.
  throw Error(ErrorCode::CenterNotCanonicalizable, "no canonical image");
}

}  // namespace squarewar
