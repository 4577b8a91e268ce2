#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uavlink/adaptation.hpp"
#include "uavlink/curve_fit.hpp"
#include "uavlink/link_model.hpp"
#include "uavlink/sweep.hpp"
#include "uavlink/topology.hpp"

namespace uavlink {

enum class OutputFormat { Csv, Json };

std::string_view to_string(OutputFormat format);

/// Fully merged run configuration. Default-constructed values reproduce the
/// reference scenario: 20 UAVs in 1500 x 1500 m, 10 pairs, 7 dBm transmit
/// power, -100 dBm noise floor, 2.4 GHz.
struct RunConfig {
    std::uint64_t seed = 42;
    std::size_t num_uavs = 20;
    AreaSpec area;
    std::size_t num_pairs = 10;
    RadioParams radio;
    double bandwidth_hz = 2.0e6;  // accepted for completeness; no formula uses it
    std::vector<std::uint64_t> packet_sizes{10, 100, 1000, 10000};
    std::size_t replicates = 1;
    unsigned threads = 1;

    std::vector<double> power_axis_dbm = default_axis_values(SweptAxis::PacketSizeByPower);
    std::vector<double> frequency_axis_hz = default_axis_values(SweptAxis::Frequency);
    std::vector<double> area_axis_m = default_axis_values(SweptAxis::Area);
    std::vector<double> count_axis = default_axis_values(SweptAxis::UavCount);

    CurveFamily curve_family = reference_curve_family();
    AdaptationPolicy policy;

    double target_loss_percent = 20.0;
    double target_power_dbm = 9.0;

    OutputFormat format = OutputFormat::Csv;
    std::string out;  ///< empty: standard output

    SweepSpec sweep_spec(SweptAxis axis) const;
};

/// Command-line override: config key (snake_case, or the --kebab-case flag
/// spelling) and its textual value. List keys take comma-separated numbers;
/// curve_family and rungs take JSON text.
using FlagOverride = std::pair<std::string, std::string>;

/// Merges defaults <- config file (JSON object) <- flags, rightmost winning.
/// Unknown keys and invalid values raise ConfigError naming the key.
RunConfig parse_config(std::string_view file_contents, const std::vector<FlagOverride>& flags = {});

/// Effective configuration as a JSON document that parse_config accepts.
std::string serialize_config(const RunConfig& config);

/// Config keys in document order.
std::vector<std::string> config_keys();

/// Canonical key for a flag spelling ("--tx-power-dbm", "loss", ...), or
/// empty if unknown.
std::string canonical_key(std::string_view flag);

} // namespace uavlink
