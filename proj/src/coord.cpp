#include "squarewar/coord.hpp"

#include <cctype>
#include <charconv>

#include "squarewar/error.hpp"

namespace squarewar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidColumn: return "invalid_column";
    case ErrorCode::InvalidRow: return "invalid_row";
    case ErrorCode::MalformedInput: return "malformed_input";
    case ErrorCode::OutOfBounds: return "out_of_bounds";
    case ErrorCode::Occupied: return "occupied";
    case ErrorCode::Rule4Violation: return "rule4_violation";
    case ErrorCode::GameOver: return "game_over";
    case ErrorCode::CenterNotCanonicalizable: return "center_not_canonicalizable";
    case ErrorCode::DegenerateInput: return "degenerate_input";
    case ErrorCode::NotBlacksTurn: return "not_blacks_turn";
    case ErrorCode::NotWhitesTurn: return "not_whites_turn";
    case ErrorCode::TooLate: return "too_late";
    case ErrorCode::OutOfScript: return "out_of_script";
    case ErrorCode::PreconditionViolation: return "precondition_violation";
    case ErrorCode::StructuralError: return "structural_error";
    case ErrorCode::BookMiss: return "book_miss";
  }
  return "unknown";
}

std::string_view to_string(Color c) {
  return c == Color::Black ? "black" : "white";
}

Coord parse_coord(std::string_view text, int n) {
  auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0]))) {
    throw Error(ErrorCode::MalformedInput,
                "expected <letter><number>, got '" + std::string(text) + "'");
  }
  const int col = std::toupper(static_cast<unsigned char>(text[0])) - 'A';
  if (col < 0 || col >= n) {
    throw Error(ErrorCode::InvalidColumn,
                "column '" + std::string(1, text[0]) + "' is off the board");
  }
  const auto digits = text.substr(1);
  int row = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), row);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorCode::MalformedInput,
                "bad row number in '" + std::string(text) + "'");
  }
  if (row < 1 || row > n) {
    throw Error(ErrorCode::InvalidRow,
                "row " + std::to_string(row) + " is off the board");
  }
  return {col, row - 1};
}

std::string format_coord(Coord c) {
  std::string out(1, static_cast<char>('A' + c.col));
  out += std::to_string(c.row + 1);
  return out;
}

}  // namespace squarewar
