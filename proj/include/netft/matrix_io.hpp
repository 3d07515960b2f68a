#pragma once

#include <iosfwd>
#include <string>

#include "netft/matrix.hpp"

namespace netft {

/// Shortest-repr decimal with at most 17 significant digits; doubles
/// round-trip exactly through this form.
std::string format_full(double v);

/// 9 significant digits, the precision result files carry.
std::string format_result(double v);

/// Matrix file format: first line "n <rows> <cols>", then one line of
/// space-separated values per row.
void write_matrix(std::ostream& out, const real_matrix& m);
void write_matrix_file(const std::string& path, const real_matrix& m);
real_matrix read_matrix(std::istream& in);
real_matrix read_matrix_file(const std::string& path);

/// Writes text to a file, throwing io_error on failure.
void write_text_file(const std::string& path, const std::string& text);

} // namespace netft
