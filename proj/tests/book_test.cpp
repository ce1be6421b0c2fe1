#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "squarewar/book.hpp"
#include "squarewar/error.hpp"
#include "squarewar/solver.hpp"

using namespace squarewar;
using nlohmann::json;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::MalformedInput;
}

}  // namespace

TEST_SUITE("book") {

TEST_CASE("solved book survives a JSON round trip unchanged") {
  const auto book = solve_all({}).second;
  const json j = to_json(book);
  CHECK(to_json(book_from_json(j)) == j);
  CHECK(j["meta"]["n"] == 19);
  CHECK(j["meta"]["mode"] == "paper");
  CHECK(j["meta"]["m"] == SolverConfig{}.max_stone);
  CHECK(j["cases"].size() == 842);

  const auto path = std::filesystem::temp_directory_path() / "squarewar_book_test.json";
  REQUIRE(save_book(book, path));
  CHECK(to_json(load_book(path)) == j);
  std::filesystem::remove(path);
}

TEST_CASE("case lookup") {
  const auto book = solve_all({}).second;
  CHECK(book.find(parse_coord("K1"), parse_coord("J11")) != nullptr);
  CHECK(book.find(parse_coord("K1"), parse_coord("C3")) == nullptr);
  for (std::size_t i = 1; i < book.cases.size(); ++i) {
    CHECK(std::pair{book.cases[i - 1].stone2, book.cases[i - 1].stone4} <
          std::pair{book.cases[i].stone2, book.cases[i].stone4});
  }
}

TEST_CASE("node format") {
  const json node = json::parse(R"({"black":"I11","threats":["J11"],"win_at":null,
      "replies":{"J11":{"black":"H10","threats":["H11","J9"],"win_at":9,"replies":{}}}})");
  const ProofNode parsed = proof_node_from_json(node);
  CHECK(parsed.black_move == parse_coord("I11"));
  CHECK_FALSE(parsed.win_at);
  REQUIRE(parsed.child(parse_coord("J11")) != nullptr);
  CHECK(parsed.child(parse_coord("J11"))->win_at == 9);
  CHECK(parsed.max_win_stone() == 9);
  CHECK(to_json(parsed) == node);
}

TEST_CASE("malformed books are structural errors") {
  const auto structural = [](const char* text) {
    return code_of([&] { book_from_json(json::parse(text)); }) == ErrorCode::StructuralError;
  };
  CHECK(structural(R"([])"));
  CHECK(structural(R"({"meta":{"n":19,"mode":"paper","m":29}})"));
  CHECK(structural(R"({"meta":{"n":19,"mode":"paper","m":29},"cases":[{"stone2":"Z1","stone4":"J11","root":{}}]})"));
  CHECK(structural(R"({"meta":{"n":19,"mode":"paper","m":29},"cases":[{"stone2":"K1","stone4":"J11",
      "root":{"black":"I11","threats":[],"win_at":7}}]})"));
  CHECK(structural(R"({"meta":{"n":19,"mode":"paper","m":29},"cases":[{"stone2":"K1","stone4":"J11",
      "root":{"black":"I11","threats":["J11"],"win_at":null,"replies":{}}}]})"));
  CHECK(structural(R"({"meta":{"n":"x"},"cases":[]})"));

  const auto path = std::filesystem::temp_directory_path() / "squarewar_corrupt.json";
  std::ofstream(path) << "{ not json";
  CHECK(code_of([&] { load_book(path); }) == ErrorCode::StructuralError);
  CHECK(code_of([] { load_book("/nonexistent/book.json"); }) == ErrorCode::StructuralError);
  std::filesystem::remove(path);
}

TEST_CASE("empty book parses") {
  const auto book = book_from_json(json::parse(R"({"meta":{"n":19,"mode":"paper","m":29},"cases":[]})"));
  CHECK(book.cases.empty());
}

}  // TEST_SUITE
