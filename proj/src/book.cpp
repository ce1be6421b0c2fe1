#include "squarewar/book.hpp"

#include <algorithm>
#include <fstream>

#include "squarewar/error.hpp"

namespace squarewar {

using nlohmann::json;

const ProofNode* ProofNode::child(Coord block) const {
  for (const ProofReply& r : replies) {
    if (r.block == block) return &r.child;
  }
  return nullptr;
}

int ProofNode::max_win_stone() const {
  int best = win_at.value_or(0);
  for (const ProofReply& r : replies) best = std::max(best, r.child.max_win_stone());
  return best;
}

const ProofNode* StrategyBook::find(Coord stone2, Coord stone4) const {
  auto key_less = [](const BookCase& c, std::pair<Coord, Coord> key) {
    return std::pair{c.stone2, c.stone4} < key;
  };
  auto it = std::lower_bound(cases.begin(), cases.end(), std::pair{stone2, stone4}, key_less);
  if (it == cases.end() || it->stone2 != stone2 || it->stone4 != stone4) return nullptr;
  return &it->root;
}

void StrategyBook::sort_cases() {
  std::stable_sort(cases.begin(), cases.end(), [](const BookCase& a, const BookCase& b) {
    return std::pair{a.stone2, a.stone4} < std::pair{b.stone2, b.stone4};
  });
}

json to_json(const ProofNode& node) {
  json threats = json::array();
  for (Coord t : node.threats) threats.push_back(format_coord(t));
  json replies = json::object();
  for (const ProofReply& r : node.replies) replies[format_coord(r.block)] = to_json(r.child);
  return json{{"black", format_coord(node.black_move)},
              {"threats", std::move(threats)},
              {"win_at", node.win_at ? json(*node.win_at) : json(nullptr)},
              {"replies", std::move(replies)}};
}

json to_json(const StrategyBook& book) {
  json cases = json::array();
  for (const BookCase& c : book.cases) {
    cases.push_back({{"stone2", format_coord(c.stone2)},
                     {"stone4", format_coord(c.stone4)},
                     {"root", to_json(c.root)}});
  }
  return json{{"meta",
               {{"n", book.meta.n},
                {"mode", book.meta.mode},
                {"m", book.meta.max_stone},
                {"version", book.meta.version}}},
              {"cases", std::move(cases)}};
}

namespace {

[[noreturn]] void structural(const std::string& what) {
  throw Error(ErrorCode::StructuralError, what);
}

Coord coord_field(const json& j, const char* key, int n) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_string()) {
    structural(std::string("missing coordinate field '") + key + "'");
  }
  try {
    return parse_coord(j[key].get<std::string>(), n);
  } catch (const Error& e) {
    structural(std::string("bad coordinate in '") + key + "': " + e.what());
  }
}

}  // namespace

ProofNode proof_node_from_json(const json& j, int n) {
  if (!j.is_object()) structural("proof node must be an object");
  ProofNode node;
  node.black_move = coord_field(j, "black", n);
  if (!j.contains("threats") || !j["threats"].is_array()) structural("node without threats");
  for (const json& t : j["threats"]) {
    if (!t.is_string()) structural("threat must be a coordinate string");
    try {
      node.threats.push_back(parse_coord(t.get<std::string>(), n));
    } catch (const Error& e) {
      structural(std::string("bad threat: ") + e.what());
    }
  }
  if (node.threats.empty()) structural("node with empty threat list");
  if (!j.contains("win_at")) structural("node without win_at");
  if (j["win_at"].is_number_integer()) {
    node.win_at = j["win_at"].get<int>();
  } else if (!j["win_at"].is_null()) {
    structural("win_at must be an integer or null");
  }
  if (j.contains("replies")) {
    const json& replies = j["replies"];
    if (!replies.is_object()) structural("replies must be an object");
    for (const auto& [key, child] : replies.items()) {
      Coord block;
      try {
        block = parse_coord(key, n);
      } catch (const Error& e) {
        structural(std::string("bad reply key: ") + e.what());
      }
      node.replies.push_back({block, proof_node_from_json(child, n)});
    }
  }
  if (node.win_at.has_value() == !node.replies.empty()) {
    structural("node must either win or list replies");
  }
  return node;
}

StrategyBook book_from_json(const json& j) {
  if (!j.is_object() || !j.contains("meta") || !j.contains("cases") || !j["cases"].is_array()) {
    structural("book needs 'meta' and 'cases'");
  }
  StrategyBook book;
  const json& meta = j["meta"];
  try {
    book.meta.n = meta.at("n").get<int>();
    book.meta.mode = meta.at("mode").get<std::string>();
    book.meta.max_stone = meta.at("m").get<int>();
    book.meta.version = meta.value("version", std::string{});
  } catch (const json::exception& e) {
    structural(std::string("bad meta: ") + e.what());
  }
  if (book.meta.n < 7 || book.meta.n > kMaxSize) structural("unsupported board size");
  for (const json& c : j["cases"]) {
    BookCase bc;
    bc.stone2 = coord_field(c, "stone2", book.meta.n);
    bc.stone4 = coord_field(c, "stone4", book.meta.n);
    if (!c.contains("root")) structural("case without root");
    bc.root = proof_node_from_json(c["root"], book.meta.n);
    book.cases.push_back(std::move(bc));
  }
  book.sort_cases();
  return book;
}

StrategyBook load_book(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) structural("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    structural("cannot parse " + path.string() + ": " + e.what());
  }
  return book_from_json(j);
}

bool save_book(const StrategyBook& book, const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path);
  if (!out) return false;
  out << to_json(book).dump() << '\n';
  return static_cast<bool>(out);
}

}  // namespace squarewar
