#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "semipos/matrix.hpp"

namespace semipos {

// Text format: one row per line, entries separated by whitespace. Each entry
// is an integer, a fraction "p/q" or an exact decimal. Blank lines and
// anything after '#' are ignored. Errors carry the 1-based line number.
RatMatrix parse_matrix(std::string_view text);
RatMatrix read_matrix_file(const std::filesystem::path& path);

// Whitespace-separated entries on a single logical line.
RatVector parse_vector(std::string_view text);

// Inverse of parse_matrix: exact "p/q" entries, one row per line.
std::string format_matrix(const RatMatrix& m);
std::string format_vector(const RatVector& v);

}  // namespace semipos
