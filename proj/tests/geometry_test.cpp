#include <doctest.h>

#include "oracles.hpp"
#include "squarewar/error.hpp"
#include "squarewar/geometry.hpp"
#include "squarewar/symmetry.hpp"

using namespace squarewar;

namespace {

std::vector<Coord> coords(std::initializer_list<const char*> names) {
  std::vector<Coord> out;
  for (const char* n : names) out.push_back(parse_coord(n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("squares_through examples") {
  const auto corner = squares_through(parse_coord("A1"));
  CHECK(corner.size() == 18);
  for (std::size_t i = 0; i < corner.size(); ++i) {
    CHECK(corner[i].corner == Coord{0, 0});
    CHECK(corner[i].side == static_cast<int>(i) + 1);
  }
  CHECK(squares_through({0, 0}, 2).size() == 1);

  // Center: four roles per side while all fit, i.e. sides 1..9.
  CHECK(oracle::squares_through_count({9, 9}, 19) == 36);
  CHECK(squares_through({9, 9}).size() == 36);
}

TEST_CASE("squares_through agrees with full enumeration and is ordered") {
  for (int n : {7, 19}) {
    for (int i = 0; i < n * n; ++i) {
      const Coord c = coord_at(i, n);
      const auto list = squares_through(c, n);
      CHECK(static_cast<int>(list.size()) == oracle::squares_through_count(c, n));
      for (std::size_t k = 0; k < list.size(); ++k) {
        CHECK(list[k].contains_vertex(c));
        if (k > 0) {
          const bool ordered = list[k - 1].side < list[k].side ||
                               (list[k - 1].side == list[k].side && list[k - 1].corner < list[k].corner);
          CHECK(ordered);
        }
      }
    }
  }
}

TEST_CASE("iso_right_completions examples") {
  CHECK(iso_right_completions(parse_coord("M8"), parse_coord("J11")) == coords({"M11", "J8"}));
  CHECK(iso_right_completions(parse_coord("N11"), parse_coord("J11")) == coords({"N7", "N15", "J7", "J15"}));
  CHECK(iso_right_completions(parse_coord("K1"), parse_coord("J11")).empty());
  CHECK_THROWS_AS(iso_right_completions(parse_coord("J11"), parse_coord("J11")), Error);
}

TEST_CASE("iso_right_completions matches the triangle predicate on a 7x7 sub-board") {
  // Every ordered pair inside columns G..M, rows 7..13, scanned against the
  // whole 19x19 board.
  for (int a = 0; a < 49; ++a) {
    for (int b = 0; b < 49; ++b) {
      if (a == b) continue;
      const Coord pa{6 + a % 7, 6 + a / 7};
      const Coord pb{6 + b % 7, 6 + b / 7};
      const auto fast = iso_right_completions(pa, pb);
      CHECK(fast == oracle::iso_right_completions(pa, pb, 19));
      CHECK(fast == iso_right_completions(pb, pa));
    }
  }
}

TEST_CASE("build_w examples") {
  const WSet m8 = build_w(parse_coord("M8"));
  CHECK(m8.u_set == coords({"M11", "J8"}));
  CHECK(m8.v_set.empty());
  CHECK(m8.all.size() == 11);

  const WSet k1 = build_w(parse_coord("K1"));
  CHECK(k1.all.size() == 9);
  CHECK(k1.all == coords({"I11", "J11", "H10", "H11", "I9", "J9", "H9", "H13", "J13"}));

  const WSet k10 = build_w(parse_coord("K10"));
  CHECK(k10.all.size() == 11);
  CHECK(k10.contains(parse_coord("K11")));
  CHECK(k10.contains(parse_coord("J10")));  // stone 1 sits here; not playable
}

TEST_CASE("W always holds the base and stays within 9..17 members") {
  int total_playable = 0;
  for (int i = 0; i < 361; ++i) {
    const Coord s2 = coord_at(i, 19);
    if (!in_canonical_domain(s2)) continue;
    const WSet w = build_w(s2);
    for (Coord b : points::kWBase) CHECK(w.contains(b));
    CHECK(w.all.size() >= 9);
    CHECK(w.all.size() <= 17);
    CHECK(std::is_sorted(w.all.begin(), w.all.end()));
    for (Coord c : w.all) CHECK(in_bounds(c, 19));
    for (Coord c : w.all) total_playable += c != points::kCenter && c != points::kSecondBlack && c != s2;
  }
  CHECK(total_playable == 842);
}

}  // TEST_SUITE
