#include "ldlab/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace ldlab {

namespace {

struct Token {
  std::string_view text;
  std::size_t line = 0;
  std::size_t column = 0;
};

// Splits into tokens grouped by line, dropping comments and blank lines.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      const std::size_t b = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > b) tokens.push_back({line.substr(b, i - b), line_no, b + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    ++line_no;
    start = end + 1;
  }
  return lines;
}

std::uint64_t parse_unsigned(const Token& t) {
  std::uint64_t v = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw ParseError(t.line, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
  return v;
}

Symbol parse_symbol(const Token& t) {
  if (t.text == "*") return kErased;
  const std::uint64_t v = parse_unsigned(t);
  if (v >= kErased) throw ParseError(t.line, t.column, "symbol out of range");
  return static_cast<Symbol>(v);
}

}  // namespace

LinearCode parse_code(std::string_view text, std::string tag) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "missing header `q n k`");
  const auto& head = lines[0];
  if (head.size() != 3) throw ParseError(head[0].line, head[0].column, "header must be `q n k`");
  const std::uint64_t q = parse_unsigned(head[0]);
  const std::uint64_t n = parse_unsigned(head[1]);
  const std::uint64_t k = parse_unsigned(head[2]);
  FieldPtr field;
  try {
    field = make_field(static_cast<std::uint32_t>(q));
  } catch (const Error& e) {
    throw ParseError(head[0].line, head[0].column, e.what());
  }
  if (lines.size() - 1 != k)
    throw ParseError(lines.back().back().line, 1, "expected " + std::to_string(k) + " generator rows");
  Matrix g(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& row = lines[i + 1];
    if (row.size() != n) throw ParseError(row[0].line, row[0].column, "expected " + std::to_string(n) + " symbols");
    for (std::size_t j = 0; j < n; ++j) {
      const Symbol s = parse_symbol(row[j]);
      if (!field->contains(s)) throw ParseError(row[j].line, row[j].column, "symbol not in GF(" + std::to_string(q) + ")");
      g(i, j) = s;
    }
  }
  return LinearCode(field, std::move(g), std::move(tag));
}

std::string format_code(const LinearCode& code) {
  std::ostringstream os;
  os << "# " << code.tag() << "\n";
  os << code.field().order() << ' ' << code.length() << ' ' << code.dimension() << '\n';
  for (std::size_t i = 0; i < code.dimension(); ++i) os << format_word(code.generator().row(i)) << '\n';
  return os.str();
}

Word parse_word(std::string_view text) {
  Word w;
  for (const auto& line : tokenize(text))
    for (const Token& t : line) w.push_back(parse_symbol(t));
  return w;
}

std::string format_word(std::span<const Symbol> w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += is_erased(w[i]) ? std::string("*") : std::to_string(w[i]);
  }
  return out;
}

Grid parse_grid(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "missing header `rows cols`");
  const auto& head = lines[0];
  if (head.size() != 2) throw ParseError(head[0].line, head[0].column, "header must be `rows cols`");
  const std::uint64_t rows = parse_unsigned(head[0]);
  const std::uint64_t cols = parse_unsigned(head[1]);
  if (lines.size() - 1 != rows)
    throw ParseError(lines.back().back().line, 1, "expected " + std::to_string(rows) + " rows");
  Grid g(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = lines[r + 1];
    if (row.size() != cols) throw ParseError(row[0].line, row[0].column, "expected " + std::to_string(cols) + " symbols");
    for (std::size_t c = 0; c < cols; ++c) g(r, c) = parse_symbol(row[c]);
  }
  return g;
}

std::string format_grid(const Grid& g) {
  std::string out = std::to_string(g.rows()) + ' ' + std::to_string(g.cols()) + '\n';
  for (std::size_t r = 0; r < g.rows(); ++r) out += format_word(g.row(r)) + '\n';
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kFileNotFound, path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kFileNotFound, "cannot write " + path);
  out << text;
}

LinearCode read_code_file(const std::string& path) { return parse_code(read_text_file(path), path); }
Word read_word_file(const std::string& path) { return parse_word(read_text_file(path)); }
Grid read_grid_file(const std::string& path) { return parse_grid(read_text_file(path)); }

}  // namespace ldlab
