/**
 * @file table_format.hpp
 * @brief Plain-text finite-table files.
 *
 *   # optional comment lines
 *   3 2
 *   0 1 2 1 2 0 2 0 1
 *
 * The header holds m and k separated by a single space; m^k decimal values in
 * 0..m-1 follow, whitespace separated, in row-major order (last argument fastest).
 * Lines whose first character is '#' are skipped wherever they appear.
 */
#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "babbage/table/finite_table.hpp"

namespace babbage {

/// Throws ParseError with 1-based line/column for malformed input.
FiniteTable read_table(std::istream& in, std::size_t max_states = kDefaultStateBudget);
FiniteTable read_table_file(const std::filesystem::path& path, std::size_t max_states = kDefaultStateBudget);

/// "m k\n" followed by the entries on one line, single-space separated.
std::string write_table(const FiniteTable& t);

}  // namespace babbage
