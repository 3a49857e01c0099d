/**
 * @file verify_examples.hpp
 * @brief Golden checks for the worked examples, run through the parser and table loader.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace babbage::cli {

/// Table files for the two worked finite examples, in the table file format.
inline constexpr std::string_view kExample6Table = "3 2\n0 1 2 1 2 0 2 0 1\n";
inline constexpr std::string_view kExample7Table = "4 2\n0 2 3 1 2 0 1 3 3 1 0 2 1 3 2 0\n";

struct ExampleCheck {
    std::string name;
    bool passed = false;
    std::string detail;  ///< empty on success
};

/// Deterministic; every check runs even if an earlier one fails.
std::vector<ExampleCheck> verify_examples();

}  // namespace babbage::cli
