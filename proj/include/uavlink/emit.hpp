#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uavlink/adaptation.hpp"
#include "uavlink/config.hpp"
#include "uavlink/curve_fit.hpp"
#include "uavlink/sweep.hpp"
#include "uavlink/topology.hpp"

namespace uavlink {

/// Shortest "%.6g"-style rendering, correctly rounded (ties to even on the
/// exact binary value) and independent of locale and libc.
std::string format_number(double value);

/// Value rounded to the 6 significant digits format_number prints.
double round_significant(double value);

struct PacketSizePrediction {
    double loss_percent = 0.0;
    double power_dbm = 0.0;
    double analytic_bits = 0.0;
    std::optional<std::uint64_t> grid_bits;  ///< only at member powers
};

PacketSizePrediction predict(double loss_percent, double power_dbm, const CurveFamily& family);

std::string emit_table(const SweepResult& result, OutputFormat format);
std::string emit_table(const std::vector<TraceSample>& trace, OutputFormat format);
std::string emit_table(const Topology& topology, OutputFormat format);
std::string emit_table(const CurveFamily& family, OutputFormat format);
std::string emit_table(const PacketSizePrediction& prediction, OutputFormat format);

/// Writes to a sibling temporary file and renames it over path, so readers
/// never observe a partial document.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

} // namespace uavlink
