#pragma once

#include <string>
#include <vector>

#include "hiero/mobius.hpp"

namespace hiero {

// What a subcommand produced: the stdout text (a single JSON object unless
// --table was given), the stderr message when something failed, and the
// process exit code (0 ok, 1 input error, 2 bound exceeded).
struct CommandResult {
    int exit_code = 0;
    std::string output;
    std::string error_message;
};

// Routes argv (program name excluded) to the matching module operation.
// Every subcommand is a thin adapter over the library call.
CommandResult dispatch(const std::vector<std::string>& args);

// Certificate <-> JSON text, used by dispatch and by round-trip checks.
std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& json_text);

}  // namespace hiero
