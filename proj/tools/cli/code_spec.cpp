#include "code_spec.hpp"

#include <charconv>
#include <vector>

#include "ldlab/error.hpp"
#include "ldlab/families.hpp"
#include "ldlab/io.hpp"

namespace ldlab::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = s.find(sep, start)) != std::string::npos; start = pos + 1)
    parts.push_back(s.substr(start, pos - start));
  parts.push_back(s.substr(start));
  return parts;
}

std::uint64_t number(const std::string& text, const std::string& description) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(Errc::kSpecInvalid, "bad number '" + text + "' in code description '" + description + "'");
  return v;
}

}  // namespace

LinearCode make_code(const std::string& description) {
  if (description.starts_with("tensor:")) {
    const auto parts = split(description.substr(7), ',');
    if (parts.size() != 2) throw Error(Errc::kSpecInvalid, "tensor needs two comma-separated codes");
    return tensor(make_code(parts[0]), make_code(parts[1]));
  }
  const auto parts = split(description, ':');
  if (parts[0] == "had") {
    if (parts.size() != 3) throw Error(Errc::kSpecInvalid, "expected had:q:k");
    return hadamard(make_field(static_cast<std::uint32_t>(number(parts[1], description))),
                    number(parts[2], description));
  }
  if (parts[0] == "rs") {
    if (parts.size() != 4) throw Error(Errc::kSpecInvalid, "expected rs:q:n:deg");
    const FieldPtr f = make_field(static_cast<std::uint32_t>(number(parts[1], description)));
    const std::uint64_t n = number(parts[2], description);
    if (n > f->order()) throw Error(Errc::kSpecInvalid, "RS length exceeds the field size");
    std::vector<Symbol> points(n);
    for (std::uint64_t i = 0; i < n; ++i) points[i] = static_cast<Symbol>(i);
    return reed_solomon(f, points, number(parts[3], description));
  }
  return read_code_file(description);
}

}  // namespace ldlab::cli
