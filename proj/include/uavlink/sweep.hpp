#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "uavlink/link_model.hpp"
#include "uavlink/topology.hpp"

namespace uavlink {

enum class SweptAxis {
    PacketSizeByPower,  ///< axis values are transmit powers, dBm
    Frequency,          ///< Hz
    Area,               ///< side of a square area, m
    UavCount,
};

std::string_view to_string(SweptAxis axis);

struct SweepSpec {
    std::uint64_t base_seed = 42;
    std::size_t num_uavs = 20;
    AreaSpec area;
    std::size_t num_pairs = 10;
    RadioParams radio;
    std::vector<std::uint64_t> packet_sizes{10, 100, 1000, 10000};
    SweptAxis swept_axis = SweptAxis::PacketSizeByPower;
    std::vector<double> axis_values{5.0, 7.0, 9.0};
    std::size_t replicates = 1;
};

/// Defaults for the given axis: powers {5, 7, 9} dBm, frequencies
/// {2.4, 5.8, 28} GHz, square sides {500 .. 3000} m, counts {5 .. 80}.
SweepSpec default_sweep_spec(SweptAxis axis);
std::vector<double> default_axis_values(SweptAxis axis);

struct SweepRow {
    double axis_value = 0.0;
    std::uint64_t packet_size_bits = 0;
    double mean_loss_percent = 0.0;
    double std_loss_percent = 0.0;

    bool operator==(const SweepRow&) const = default;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows;  // sorted by (axis value, packet size)

    const SweepRow* find(double axis_value, std::uint64_t packet_size) const;
};

/// Runs every (axis value x replicate) cell; replicate r uses topology seed
/// base_seed + r. Cells are independent, so `threads` only changes wall time.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 1);

SweepResult run_packet_power_sweep(SweepSpec spec, unsigned threads = 1);
SweepResult run_frequency_sweep(SweepSpec spec, unsigned threads = 1);
SweepResult run_area_sweep(SweepSpec spec, unsigned threads = 1);
SweepResult run_count_sweep(SweepSpec spec, unsigned threads = 1);

struct PowerRatioCell {
    double low_power_dbm = 0.0;
    double high_power_dbm = 0.0;
    std::uint64_t packet_size_bits = 0;
    std::optional<double> loss_ratio;  ///< loss(low) / loss(high); empty if loss(high) == 0
};

struct PowerPairSummary {
    double low_power_dbm = 0.0;
    double high_power_dbm = 0.0;
    std::optional<double> nominal_ratio;  ///< high / low in dBm units
    std::optional<double> mean_loss_ratio;
};

struct PowerRatioReport {
    std::vector<PowerRatioCell> cells;
    std::vector<PowerPairSummary> pairs;
};

/// Loss ratios between every pair of swept powers, per packet size.
PowerRatioReport power_ratio_report(const SweepResult& power_sweep);

} // namespace uavlink
