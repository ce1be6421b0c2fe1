#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "squarewar/book.hpp"
#include "squarewar/coord.hpp"

namespace squarewar {

// Checks built on Board and geometry only; nothing here calls into the search.

struct ScriptCaseResult {
  bool ok = false;
  int win_stone = 0;
  std::string failure;  // empty when ok
};

// Plays the scripted line for one outside-W case, branching over both blocks
// of the final double threat, and checks every White alternative at every
// White turn.
ScriptCaseResult verify_script_case(Coord stone2, Coord stone4);

struct ScriptReport {
  int cases = 0;
  int skipped_inside_w = 0;
  int max_win_stone = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Every canonical stone 2 (K..S x 1..10) and every empty stone 4 outside W.
ScriptReport verify_script_all();

struct BookReport {
  int cases = 0;
  int valid = 0;
  std::vector<std::string> failures;  // one line per failing case
  std::vector<std::string> missing;   // canonical cases with no entry

  bool ok() const { return failures.empty(); }
};

// Full adversarial check of every proof tree against all White replies.
BookReport validate_book(const StrategyBook& book);

struct ReplayStats {
  int games = 0;
  int black_wins = 0;
  int max_stone = 0;
  double mean_stone = 0.0;
  std::uint64_t transcript_digest = 0;  // FNV-1a over every game's move list
};

// The engine as Black against a uniformly random White.
ReplayStats replay_random(const StrategyBook& book, int games, std::uint64_t seed);

nlohmann::json verification_report_json(const ScriptReport* script, const BookReport* book);

}  // namespace squarewar
