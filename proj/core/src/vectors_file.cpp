#include "cartsum/vectors_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "cartsum/errors.hpp"

namespace cartsum {

std::vector<Vector> parse_vectors(std::string_view text) {
  std::vector<Vector> vectors;
  std::size_t line_start = 0;
  std::size_t line_no = 0;
  while (line_start < text.size()) {
    std::size_t eol = text.find('\n', line_start);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(line_start, eol - line_start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!line.empty() && line.front() != '#') {
      Vector v;
      std::size_t field_start = 0;
      for (;;) {
        const std::size_t comma = line.find(',', field_start);
        const std::size_t field_end = comma == std::string_view::npos ? line.size() : comma;
        const std::string_view field = line.substr(field_start, field_end - field_start);
        const std::size_t offset = line_start + field_start;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (field.empty()) throw ParseError(where + "empty value", offset);
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size()) {
          throw ParseError(where + "not a number '" + std::string(field) + "'", offset);
        }
        if (!std::isfinite(value)) throw ParseError(where + "non-finite value", offset);
        v.push_back(value);
        if (comma == std::string_view::npos) break;
        field_start = comma + 1;
      }
      vectors.push_back(std::move(v));
    }
    line_start = eol + 1;
  }
  if (vectors.empty()) throw ParseError("no vectors in input", 0);
  return vectors;
}

std::vector<Vector> load_vectors(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_vectors(buffer.str());
}

}  // namespace cartsum
