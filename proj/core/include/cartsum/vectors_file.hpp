#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "cartsum/types.hpp"

namespace cartsum {

/// Reads the vectors text format: one vector per line, decimal reals
/// separated by single commas. Blank lines and lines starting with '#' are
/// ignored; a trailing '\r' is dropped. Throws ParseError (byte offset of the
/// offending field) on empty fields, non-numeric or non-finite values, or a
/// document without vectors.
std::vector<Vector> parse_vectors(std::string_view text);
std::vector<Vector> load_vectors(const std::filesystem::path& path);

}  // namespace cartsum
