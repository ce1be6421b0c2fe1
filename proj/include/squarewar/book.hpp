#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "squarewar/coord.hpp"

namespace squarewar {

struct ProofReply;

// One Black move of a forced win. Either the node wins outright (win_at is
// the stone number completing the square) or White's only non-losing reply
// is one of `threats`, each leading to a child node.
struct ProofNode {
  Coord black_move;
  std::vector<Coord> threats;  // Black's completion points after black_move
  std::optional<int> win_at;
  std::vector<ProofReply> replies;

  const ProofNode* child(Coord block) const;
  // Stone number of the deepest win in this subtree.
  int max_win_stone() const;
};

struct ProofReply {
  Coord block;
  ProofNode child;
};

struct BookMeta {
  int n = kDefaultSize;
  std::string mode = "paper";
  int max_stone = 31;
  std::string version;
};

struct BookCase {
  Coord stone2;
  Coord stone4;
  ProofNode root;
};

// Proofs for the stone-4-inside-W cases, keyed by canonical (stone2, stone4).
struct StrategyBook {
  BookMeta meta;
  std::vector<BookCase> cases;  // sorted by (stone2, stone4), row-major

  const ProofNode* find(Coord stone2, Coord stone4) const;
  void sort_cases();
};

nlohmann::json to_json(const ProofNode& node);
nlohmann::json to_json(const StrategyBook& book);

// Throws Error{StructuralError} on anything that is not a well-formed book.
ProofNode proof_node_from_json(const nlohmann::json& j, int n = kDefaultSize);
StrategyBook book_from_json(const nlohmann::json& j);

// Throws Error{StructuralError} for unreadable or malformed files.
StrategyBook load_book(const std::filesystem::path& path);
// Returns false if the file could not be written.
bool save_book(const StrategyBook& book, const std::filesystem::path& path);

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace squarewar
