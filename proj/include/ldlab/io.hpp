#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ldlab/error.hpp"
#include "ldlab/linear_code.hpp"

namespace ldlab {

/// ParseError carrying the 1-based position of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(Errc::kParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Generator format: `q n k` on the first line, then k rows of n symbols.
/// Symbols are base-p integers; `#` starts a comment.
LinearCode parse_code(std::string_view text, std::string tag = "file");
std::string format_code(const LinearCode& code);

/// Whitespace-separated symbols, `*` for ⊥.
Word parse_word(std::string_view text);
std::string format_word(std::span<const Symbol> w);

/// `rows cols` on the first line, then one row per line.
Grid parse_grid(std::string_view text);
std::string format_grid(const Grid& g);

/// Throws FileNotFound.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

LinearCode read_code_file(const std::string& path);
Word read_word_file(const std::string& path);
Grid read_grid_file(const std::string& path);

}  // namespace ldlab
