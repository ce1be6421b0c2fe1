#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "squarewar/coord.hpp"

namespace squarewar {

// The dihedral group of the square board, in the fixed tie-break order used
// by canonicalize_reply.
enum class Symmetry : std::uint8_t {
  Identity,
  ReflectColumn,  // mirror about the center column (J on 19x19)
  ReflectRow,     // mirror about the center row (10 on 19x19)
  Rotate180,
  MainDiagonal,   // (c, r) -> (r, c)
  AntiDiagonal,   // (c, r) -> (n-1-r, n-1-c)
  Rotate90,       // (c, r) -> (n-1-r, c)
  Rotate270,      // (c, r) -> (r, n-1-c)
};

inline constexpr std::array<Symmetry, 8> kAllSymmetries{
    Symmetry::Identity,     Symmetry::ReflectColumn, Symmetry::ReflectRow,
    Symmetry::Rotate180,    Symmetry::MainDiagonal,  Symmetry::AntiDiagonal,
    Symmetry::Rotate90,     Symmetry::Rotate270};

std::string_view to_string(Symmetry s);
Symmetry symmetry_from_string(std::string_view name);

Coord apply_transform(Symmetry s, Coord c, int n = kDefaultSize);
Symmetry inverse(Symmetry s);
// compose(a, b) applies b first, then a.
Symmetry compose(Symmetry a, Symmetry b);

// Columns right of center, rows up to and including center.
bool in_canonical_domain(Coord c, int n = kDefaultSize);

// First symmetry in kAllSymmetries order that maps stone2 into the canonical
// domain, together with the image.
// Throws Error{CenterNotCanonicalizable} for the center point.
std::pair<Symmetry, Coord> canonicalize_reply(Coord stone2,
                                              int n = kDefaultSize);

}  // namespace squarewar
