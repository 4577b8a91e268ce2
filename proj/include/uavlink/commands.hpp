#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "uavlink/config.hpp"

namespace uavlink {

enum class Subcommand {
    Topology,
    SweepPower,
    SweepFrequency,
    SweepArea,
    SweepCount,
    Fit,
    Predict,
    Adapt,
};

std::string_view to_string(Subcommand command);
std::optional<Subcommand> parse_subcommand(std::string_view name);
std::span<const Subcommand> all_subcommands();

/// Produces the subcommand's document. Throws uavlink::Error.
std::string render_subcommand(Subcommand command, const RunConfig& config);

struct CommandOutcome {
    int exit_code = 0;
    std::string document;    ///< set on success when config.out is empty
    std::string diagnostic;  ///< one line, set on failure
};

/// Runs a subcommand and writes its document to config.out (atomically) or
/// returns it for standard output. Errors become exit codes.
CommandOutcome run_subcommand(Subcommand command, const RunConfig& config);

} // namespace uavlink
