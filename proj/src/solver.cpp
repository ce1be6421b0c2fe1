#include "squarewar/solver.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "squarewar/error.hpp"
#include "squarewar/geometry.hpp"
#include "squarewar/symmetry.hpp"

namespace squarewar {

namespace {

constexpr int kN = kDefaultSize;

void append_candidates(std::span<const std::uint8_t> cells, int n,
                       std::span<const Coord> black,
                       std::vector<CandidateMove>& out) {
  auto empty = [&](Coord c) { return in_bounds(c, n) && cells[index_of(c, n)] == kEmpty; };
  for (std::size_t i = 0; i < black.size(); ++i) {
    for (std::size_t j = i + 1; j < black.size(); ++j) {
      const Coord p = black[i];
      const Coord q = black[j];
      int dc = 0;
      int dr = 0;
      if (p.row == q.row) {
        dr = std::abs(p.col - q.col);
      } else if (p.col == q.col) {
        dc = std::abs(p.row - q.row);
      } else {
        continue;
      }
      if (dc + dr > 3) continue;
      for (int sign : {1, -1}) {
        const Coord next_p{p.col + sign * dc, p.row + sign * dr};
        const Coord next_q{q.col + sign * dc, q.row + sign * dr};
        if (!empty(next_p) || !empty(next_q)) continue;
        out.push_back({next_q, next_p, {p, q}});
        out.push_back({next_p, next_q, {p, q}});
      }
    }
  }
}

// Mutable position with explicit undo, owned by one search.
class SearchPosition {
 public:
  explicit SearchPosition(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, kEmpty) {}

  void play(Coord c, Color color) {
    cells_[index_of(c, n_)] = cell_of(color);
    (color == Color::Black ? black_ : white_).push_back(c);
  }

  void undo(Color color) {
    auto& list = color == Color::Black ? black_ : white_;
    cells_[index_of(list.back(), n_)] = kEmpty;
    list.pop_back();
  }

  std::vector<Coord> winning_points(Color color) const {
    return find_winning_points(cells_, n_, color == Color::Black ? black_ : white_, color);
  }

  std::vector<CandidateMove> candidates() const {
    std::vector<CandidateMove> out;
    append_candidates(cells_, n_, black_, out);
    return out;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint8_t c : cells_) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  int n_;
  std::vector<std::uint8_t> cells_;
  std::vector<Coord> black_;
  std::vector<Coord> white_;
};

class Search {
 public:
  Search(SearchPosition& pos, int max_stone) : pos_(pos), max_stone_(max_stone) {}

  // Black is to play stone number `stone`.
  std::optional<ProofNode> black_node(int stone) {
    if (stone > max_stone_) return std::nullopt;
    if (const auto wins = pos_.winning_points(Color::Black); !wins.empty()) {
      return ProofNode{wins.front(), wins, stone, {}};
    }
    for (const CandidateMove& cand : pos_.candidates()) {
      pos_.play(cand.play, Color::Black);
      // White completing a square on its next turn refutes the line.
      if (!pos_.winning_points(Color::White).empty()) {
        pos_.undo(Color::Black);
        continue;
      }
      auto threats = pos_.winning_points(Color::Black);
      if (threats.size() >= 2) {
        pos_.undo(Color::Black);
        if (stone + 2 > max_stone_) continue;
        return ProofNode{cand.play, std::move(threats), stone + 2, {}};
      }
      const Coord block = threats.front();
      pos_.play(block, Color::White);
      auto child = black_node(stone + 2);
      pos_.undo(Color::White);
      pos_.undo(Color::Black);
      if (child) {
        ProofNode node{cand.play, std::move(threats), std::nullopt, {}};
        node.replies.push_back({block, std::move(*child)});
        return node;
      }
    }
    return std::nullopt;
  }

 private:
  SearchPosition& pos_;
  int max_stone_;
};

}  // namespace

std::vector<CandidateMove> candidate_moves(const Board& board) {
  if (board.to_move() != Color::Black) {
    throw Error(ErrorCode::NotBlacksTurn, "candidates are generated for Black");
  }
  std::vector<CandidateMove> out;
  const auto black = board.stones(Color::Black);
  append_candidates(board.cells(), board.size(), black, out);
  return out;
}

std::string_view to_string(DomainMode mode) {
  return mode == DomainMode::Paper ? "paper" : "extended";
}

DomainMode domain_mode_from_string(std::string_view name) {
  if (name == "paper") return DomainMode::Paper;
  if (name == "extended") return DomainMode::Extended;
  throw Error(ErrorCode::MalformedInput, "unknown mode '" + std::string(name) + "'");
}

std::vector<Coord> stone2_domain(DomainMode mode) {
  std::vector<Coord> out;
  for (int row = 0; row < kN; ++row) {
    for (int col = 0; col < kN; ++col) {
      const Coord c{col, row};
      if (mode == DomainMode::Paper ? in_canonical_domain(c, kN) : c != points::kCenter) {
        out.push_back(c);
      }
    }
  }
  return out;  // row-major
}

bool reachable_by_reflections(Coord stone2) {
  for (Symmetry s : {Symmetry::Identity, Symmetry::ReflectColumn, Symmetry::ReflectRow,
                     Symmetry::Rotate180}) {
    if (in_canonical_domain(apply_transform(s, stone2, kN), kN)) return true;
  }
  return false;
}

std::optional<ProofNode> solve_case(Coord stone2, Coord stone4, const SolverConfig& config) {
  if (!in_bounds(stone2, kN) || stone2 == points::kCenter || stone2 == points::kSecondBlack) {
    throw Error(ErrorCode::PreconditionViolation, "stone 2 must be an empty point");
  }
  const WSet w = build_w(stone2);
  if (!w.contains(stone4) || stone4 == points::kCenter || stone4 == points::kSecondBlack ||
      stone4 == stone2) {
    throw Error(ErrorCode::PreconditionViolation,
                format_coord(stone4) + " is not a playable W point for stone 2 at " +
                    format_coord(stone2));
  }
  SearchPosition pos(kN);
  pos.play(points::kCenter, Color::Black);
  pos.play(stone2, Color::White);
  pos.play(points::kSecondBlack, Color::Black);
  pos.play(stone4, Color::White);
  const std::uint64_t before = pos.hash();
  Search search(pos, config.max_stone);
  auto proof = search.black_node(5);
  if (pos.hash() != before) throw std::logic_error("search did not restore the position");
  return proof;
}

nlohmann::json SolveReport::to_json() const {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [stone, count] : histogram) hist[std::to_string(stone)] = count;
  nlohmann::json missing = nlohmann::json::array();
  for (const CaseKey& k : unproved) {
    missing.push_back({{"stone2", format_coord(k.stone2)}, {"stone4", format_coord(k.stone4)}});
  }
  nlohmann::json out{{"mode", to_string(mode)},
                     {"c_e", c_e},
                     {"c_w", c_w},
                     {"w_a", w_a},
                     {"max_win_stone", max_win_stone},
                     {"histogram", std::move(hist)},
                     {"elapsed_ms", elapsed_ms},
                     {"unproved", std::move(missing)}};
  if (mode == DomainMode::Extended) out["reflection_gap_cases"] = reflection_gap_cases;
  return out;
}

std::pair<SolveReport, StrategyBook> solve_all(const SolverConfig& config) {
  const auto start = std::chrono::steady_clock::now();

  // Each enumerated case points at a canonical case; canonical cases are
  // solved once.
  struct Enumerated {
    CaseKey raw;
    std::size_t canonical;
    bool gap;
  };
  std::vector<CaseKey> canonical;
  std::map<std::pair<Coord, Coord>, std::size_t> canonical_index;
  std::vector<Enumerated> cases;
  for (Coord raw2 : stone2_domain(config.mode)) {
    const auto [frame, stone2] = canonicalize_reply(raw2, kN);
    const Symmetry back = inverse(frame);
    const bool gap = !reachable_by_reflections(raw2);
    for (Coord stone4 : build_w(stone2).all) {
      if (stone4 == points::kCenter || stone4 == points::kSecondBlack || stone4 == stone2) continue;
      auto [it, fresh] = canonical_index.try_emplace({stone2, stone4}, canonical.size());
      if (fresh) canonical.push_back({stone2, stone4});
      cases.push_back({{raw2, apply_transform(back, stone4, kN)}, it->second, gap});
    }
  }

  std::vector<std::optional<ProofNode>> results(canonical.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < canonical.size(); i = next++) {
      results[i] = solve_case(canonical[i].stone2, canonical[i].stone4, config);
    }
  };
  int jobs = config.jobs > 0 ? config.jobs
                             : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(canonical.size(), 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  SolveReport report;
  report.mode = config.mode;
  report.c_e = static_cast<int>(cases.size());
  for (const Enumerated& e : cases) {
    const auto& proof = results[e.canonical];
    if (e.gap) ++report.reflection_gap_cases;
    if (!proof) {
      report.unproved.push_back(e.raw);
      continue;
    }
    ++report.c_w;
    const int win = proof->max_win_stone();
    ++report.histogram[win];
    report.max_win_stone = std::max(report.max_win_stone, win);
  }
  report.w_a = report.c_e == report.c_w;

  StrategyBook book;
  book.meta = {kN, std::string(to_string(config.mode)), config.max_stone, kToolVersion};
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    if (results[i]) book.cases.push_back({canonical[i].stone2, canonical[i].stone4, std::move(*results[i])});
  }
  book.sort_cases();
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return {std::move(report), std::move(book)};
}

}  // namespace squarewar
