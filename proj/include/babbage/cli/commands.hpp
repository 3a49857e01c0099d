/**
 * @file commands.hpp
 * @brief Subcommands of the babbage tool, runnable in-process.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage, parse or contract
 * error, 3 resource budget exceeded.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "babbage/table/finite_table.hpp"

namespace babbage::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

inline constexpr std::size_t kDefaultOrderBound = 1000;
inline constexpr std::size_t kDefaultMaxSteps = 10'000;

struct CommandConfig {
    std::string command;

    // Input source; at most one of these is set.
    std::optional<std::string> definition;
    std::optional<std::string> table_path;
    /// Table text in the file format, used in place of a path.
    std::optional<std::string> table_text;

    std::optional<std::string> seed;
    std::optional<long> n;
    /// Order for check-ii, kept as text so it can exceed machine integers.
    std::optional<std::string> ii_order;
    std::optional<std::size_t> arg;
    std::optional<std::size_t> m;
    std::optional<std::size_t> k;
    std::optional<std::size_t> to;
    std::optional<std::string> perm;

    std::size_t bound = kDefaultOrderBound;
    std::size_t max_steps = kDefaultMaxSteps;
    std::size_t max_states = kDefaultStateBudget;
    bool json = false;
};

struct CommandResult {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

/// Every recognised subcommand name, in display order.
const std::vector<std::string>& command_names();

/// Never throws; errors become a diagnostic in `err` and a nonzero exit code.
CommandResult run(const CommandConfig& config);

}  // namespace babbage::cli
