#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "squarewar/board.hpp"
#include "squarewar/book.hpp"

namespace squarewar {

// A Black move r that, together with a same-line pair (p, q) at distance at
// most three, leaves an empty corner s as a square completion point.
struct CandidateMove {
  Coord play;
  Coord threat;
  std::pair<Coord, Coord> support;

  friend bool operator==(const CandidateMove&, const CandidateMove&) = default;
};

// Ordered by (insertion index of p, insertion index of q, positive side before
// negative side, play next to q before play next to p).
std::vector<CandidateMove> candidate_moves(const Board& board);

enum class DomainMode { Paper, Extended };

std::string_view to_string(DomainMode mode);
DomainMode domain_mode_from_string(std::string_view name);

struct SolverConfig {
  int max_stone = 29;  // inclusive bound on Black's winning stone
  DomainMode mode = DomainMode::Paper;
  int jobs = 0;  // 0: one per hardware thread
};

// Stone-2 positions enumerated. Paper mode: the canonical block K..S x 1..10.
// Extended mode: every non-center point, each mapped to its canonical image
// before solving.
std::vector<Coord> stone2_domain(DomainMode mode);

// True when mirroring about the center column/row (and their composite) can
// bring the point into the canonical block; column-J points need a diagonal.
bool reachable_by_reflections(Coord stone2);

// Depth-first threat search for the position B J10, W stone2, B I10,
// W stone4 (canonical frame). Returns the first proof found within
// config.max_stone, or nullopt.
// Throws Error{PreconditionViolation} if stone4 is not a playable W point.
std::optional<ProofNode> solve_case(Coord stone2, Coord stone4,
                                    const SolverConfig& config);

struct CaseKey {
  Coord stone2;
  Coord stone4;
};

struct SolveReport {
  DomainMode mode = DomainMode::Paper;
  int c_e = 0;
  int c_w = 0;
  bool w_a = false;
  std::map<int, int> histogram;  // winning stone number -> cases
  int max_win_stone = 0;
  std::int64_t elapsed_ms = 0;
  std::vector<CaseKey> unproved;  // in the frame they were enumerated in
  // Extended mode only: cases whose stone 2 needs a diagonal symmetry.
  int reflection_gap_cases = 0;

  nlohmann::json to_json() const;
};

std::pair<SolveReport, StrategyBook> solve_all(const SolverConfig& config);

}  // namespace squarewar
