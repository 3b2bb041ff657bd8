#pragma once

#include "z2tk/exact_arith.hpp"

#include <string>

#include <json.hpp>

namespace z2tk {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 2, kExitUsage = 64, kExitInternal = 70 };

class UsageError : public Error {
  public:
    using Error::Error;
};

/// Report envelope: {tool, schema_version, command, status, exit_code, summary, findings, data[, error]}.
struct CommandResult {
    int exit_code = kExitOk;
    nlohmann::json report;
};

/// Runs one command described by a JSON config, e.g.
/// {"command": "probe", "block": "D2", "points": [["2", "4"]], "seed": ["1", "0"]}.
/// Never throws: bad input gives exit 64, unexpected failures exit 70.
CommandResult run_command(const nlohmann::json& config);

/// Plain-text rendering of a report envelope.
std::string render_text(const nlohmann::json& report);

} // namespace z2tk
