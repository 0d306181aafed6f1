#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace outf3::cli {

/// Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
/// input error.
struct CommandOutcome {
    int exit_code = 0;
    std::string text;
    std::optional<nlohmann::json> payload;
};

/// Dispatches the subcommands (case-table, verify-gersten, decompose,
/// diagram, torelli, admissible, identities). argv excludes the program
/// name.
CommandOutcome execute(const std::vector<std::string>& args);

}  // namespace outf3::cli
