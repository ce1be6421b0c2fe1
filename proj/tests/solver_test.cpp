#include <doctest.h>

#include "squarewar/error.hpp"
#include "squarewar/geometry.hpp"
#include "squarewar/solver.hpp"

using namespace squarewar;

namespace {

Coord at(const char* s) { return parse_coord(s); }

Board game(std::initializer_list<const char*> moves) {
  std::vector<Coord> cs;
  for (const char* m : moves) cs.push_back(at(m));
  return Board::from_moves(cs);
}

void walk(const ProofNode& node, int stone, int max_stone) {
  REQUIRE_FALSE(node.threats.empty());
  if (node.win_at) {
    CHECK(*node.win_at % 2 == 1);
    CHECK(*node.win_at <= max_stone);
    CHECK((node.threats.size() >= 2 || *node.win_at == stone));
    CHECK(node.replies.empty());
    return;
  }
  REQUIRE(node.replies.size() == 1);
  CHECK(node.replies.front().block == node.threats.front());
  walk(node.replies.front().child, stone + 2, max_stone);
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("candidate_moves from the opening pair") {
  // White far away so Black has stones J10 and I10 only.
  const auto c = candidate_moves(game({"J10", "A1", "I10", "A19"}));
  REQUIRE(c.size() == 4);
  CHECK(c[0].play == at("I11"));
  CHECK(c[0].threat == at("J11"));
  CHECK(c[1].play == at("J11"));
  CHECK(c[1].threat == at("I11"));
  CHECK(c[2].play == at("I9"));
  CHECK(c[2].threat == at("J9"));
  CHECK(c[3].play == at("J9"));
  CHECK(c[3].threat == at("I9"));
  for (const auto& m : c) CHECK(m.support == std::pair{at("J10"), at("I10")});
}

TEST_CASE("candidate_moves ignores pairs further than three apart") {
  // J10 and N10 are four apart; J10-J11 adds the only candidates.
  const auto c = candidate_moves(game({"J10", "A1", "J11", "A19", "N10", "S1"}));
  for (const auto& m : c) CHECK(m.support == std::pair{at("J10"), at("J11")});
  CHECK(c.size() == 4);
}

TEST_CASE("candidate_moves skips squares with an occupied corner") {
  const auto c = candidate_moves(game({"J10", "J11", "I10", "A19"}));
  REQUIRE(c.size() == 2);
  CHECK(c[0].play == at("I9"));
  CHECK(c[1].play == at("J9"));
}

TEST_CASE("candidate_moves requires Black to move") {
  CHECK_THROWS_AS(candidate_moves(game({"J10"})), Error);
}

TEST_CASE("solve_case proves an inside-W case") {
  const auto proof = solve_case(at("K1"), at("J11"), {});
  REQUIRE(proof);
  CHECK(proof->max_win_stone() <= 30);
  walk(*proof, 5, SolverConfig{}.max_stone);
}

TEST_CASE("solve_case rejects cases outside W") {
  try {
    solve_case(at("M8"), at("C3"), {});
    FAIL("expected PreconditionViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolation);
  }
  CHECK_THROWS_AS(solve_case(at("K10"), at("J10"), {}), Error);  // occupied W member
}

TEST_CASE("a stone bound too small for any proof yields nothing") {
  SolverConfig tight;
  tight.max_stone = 5;
  CHECK_FALSE(solve_case(at("K1"), at("J11"), tight));
}

TEST_CASE("column-J stone 2 left unrotated defeats the search") {
  // With White on J9 and stone 3 still on I10, these two replies leave the
  // threat search without a proof at any depth; the diagonal symmetry maps
  // J9 to K10 instead, where stone 3 lands on J11.
  SolverConfig deep;
  deep.max_stone = 41;
  CHECK_FALSE(solve_case(at("J9"), at("J11"), deep));
  CHECK_FALSE(solve_case(at("J9"), at("I11"), deep));
  CHECK(solve_case(at("K10"), at("J11"), deep));
}

TEST_CASE("stone-2 domains") {
  const auto paper = stone2_domain(DomainMode::Paper);
  CHECK(paper.size() == 90);
  CHECK(std::is_sorted(paper.begin(), paper.end()));
  CHECK(stone2_domain(DomainMode::Extended).size() == 360);
  CHECK(reachable_by_reflections(at("A10")));
  CHECK_FALSE(reachable_by_reflections(at("J3")));
  CHECK(domain_mode_from_string("extended") == DomainMode::Extended);
}

TEST_CASE("paper-mode solve proves all 842 cases within the stone bound") {
  const auto [report, book] = solve_all({});
  CHECK(report.c_e == 842);
  CHECK(report.c_w == 842);
  CHECK(report.w_a);
  CHECK(report.max_win_stone <= 30);
  CHECK(book.cases.size() == 842);
  int hist_total = 0;
  for (const auto& [stone, count] : report.histogram) {
    CHECK(stone % 2 == 1);
    hist_total += count;
  }
  CHECK(hist_total == 842);
  for (const auto& c : book.cases) walk(c.root, 5, SolverConfig{}.max_stone);
}

TEST_CASE("solve_all is deterministic regardless of worker count") {
  SolverConfig one;
  one.jobs = 1;
  SolverConfig three;
  three.jobs = 3;
  const auto [r1, b1] = solve_all(one);
  const auto [r3, b3] = solve_all(three);
  auto strip = [](nlohmann::json j) {
    j.erase("elapsed_ms");
    return j;
  };
  CHECK(strip(r1.to_json()) == strip(r3.to_json()));
  CHECK(to_json(b1) == to_json(b3));
}

TEST_CASE("insufficient depth leaves cases unproved") {
  SolverConfig shallow;
  shallow.max_stone = 9;
  const auto [report, book] = solve_all(shallow);
  CHECK(report.c_e == 842);
  CHECK(report.c_w < report.c_e);
  CHECK_FALSE(report.w_a);
  CHECK(report.unproved.size() == static_cast<std::size_t>(report.c_e - report.c_w));
}

TEST_CASE("extended mode covers every raw stone 2") {
  SolverConfig ext;
  ext.mode = DomainMode::Extended;
  const auto [report, book] = solve_all(ext);
  CHECK(report.w_a);
  CHECK(report.c_e >= 842);
  CHECK(report.reflection_gap_cases > 0);
  CHECK(book.cases.size() == 842);
  CHECK(report.to_json().contains("reflection_gap_cases"));
}

}  // TEST_SUITE
