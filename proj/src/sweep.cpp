#include "uavlink/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "uavlink/error.hpp"

namespace uavlink {

namespace {

void validate_spec(const SweepSpec& spec) {
    if (spec.axis_values.empty()) fail(ErrorKind::InvalidArgument, "sweep axis has no values");
    for (std::size_t i = 0; i < spec.axis_values.size(); ++i) {
        if (!std::isfinite(spec.axis_values[i])) {
            fail(ErrorKind::InvalidArgument, "sweep axis values must be finite");
        }
        if (i > 0 && !(spec.axis_values[i] > spec.axis_values[i - 1])) {
            fail(ErrorKind::InvalidArgument, "sweep axis values must be strictly increasing");
        }
    }
    if (spec.packet_sizes.empty()) fail(ErrorKind::InvalidArgument, "no packet sizes given");
    for (std::size_t i = 0; i < spec.packet_sizes.size(); ++i) {
        if (spec.packet_sizes[i] == 0) fail(ErrorKind::InvalidArgument, "packet size must be >= 1 bit");
        if (i > 0 && spec.packet_sizes[i] <= spec.packet_sizes[i - 1]) {
            fail(ErrorKind::InvalidArgument, "packet sizes must be strictly increasing");
        }
    }
    if (spec.replicates == 0) fail(ErrorKind::InvalidArgument, "replicates must be >= 1");
    if (spec.swept_axis == SweptAxis::UavCount) {
        for (double v : spec.axis_values) {
            if (v < 2.0 || v != std::floor(v)) {
                fail(ErrorKind::InvalidArgument, "UAV counts must be integers >= 2");
            }
        }
    }
}

// Mean pair loss per packet size for one (axis value, replicate) cell.
std::vector<double> run_cell(const SweepSpec& spec, double axis_value, std::size_t replicate) {
    const std::uint64_t seed = spec.base_seed + static_cast<std::uint64_t>(replicate);
    std::size_t num_uavs = spec.num_uavs;
    AreaSpec area = spec.area;
    RadioParams radio = spec.radio;
    switch (spec.swept_axis) {
    case SweptAxis::PacketSizeByPower: radio.tx_power_dbm = axis_value; break;
    case SweptAxis::Frequency: radio.frequency_hz = axis_value; break;
    case SweptAxis::Area: area = {axis_value, axis_value}; break;
    case SweptAxis::UavCount: num_uavs = static_cast<std::size_t>(axis_value); break;
    }
    const Topology topology = generate_topology(seed, num_uavs, area, spec.num_pairs);
    std::vector<double> out;
    out.reserve(spec.packet_sizes.size());
    for (auto size : spec.packet_sizes) out.push_back(mean_pair_loss_percent(topology, radio, size));
    return out;
}

SweepResult run_with_axis(SweepSpec spec, SweptAxis axis, unsigned threads) {
    spec.swept_axis = axis;
    return run_sweep(spec, threads);
}

} // namespace

std::string_view to_string(SweptAxis axis) {
    switch (axis) {
    case SweptAxis::PacketSizeByPower: return "power_dbm";
    case SweptAxis::Frequency: return "frequency_hz";
    case SweptAxis::Area: return "area_side_m";
    case SweptAxis::UavCount: return "num_uavs";
    }
    return "unknown";
}

std::vector<double> default_axis_values(SweptAxis axis) {
    switch (axis) {
    case SweptAxis::PacketSizeByPower: return {5.0, 7.0, 9.0};
    case SweptAxis::Frequency: return {2.4e9, 5.8e9, 2.8e10};
    case SweptAxis::Area: return {500.0, 1000.0, 1500.0, 2000.0, 3000.0};
    case SweptAxis::UavCount: return {5.0, 10.0, 20.0, 40.0, 80.0};
    }
    return {};
}

SweepSpec default_sweep_spec(SweptAxis axis) {
    SweepSpec spec;
    spec.swept_axis = axis;
    spec.axis_values = default_axis_values(axis);
    return spec;
}

const SweepRow* SweepResult::find(double axis_value, std::uint64_t packet_size) const {
    for (const auto& row : rows) {
        if (row.axis_value == axis_value && row.packet_size_bits == packet_size) return &row;
    }
    return nullptr;
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
    validate_spec(spec);

    const std::size_t num_axis = spec.axis_values.size();
    const std::size_t num_cells = num_axis * spec.replicates;
    std::vector<std::vector<double>> cells(num_cells);
    std::vector<std::exception_ptr> errors(num_cells);

    auto work = [&](std::size_t cell) {
        try {
            cells[cell] = run_cell(spec, spec.axis_values[cell / spec.replicates], cell % spec.replicates);
        } catch (...) {
            errors[cell] = std::current_exception();
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(threads, 1, num_cells);
    if (workers == 1) {
        for (std::size_t c = 0; c < num_cells; ++c) work(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < num_cells; c = next++) work(c);
            });
        }
    }
    // First failing cell in cell order, independent of scheduling.
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    SweepResult result;
    result.spec = spec;
    result.rows.reserve(num_axis * spec.packet_sizes.size());
    const auto reps = static_cast<double>(spec.replicates);
    for (std::size_t a = 0; a < num_axis; ++a) {
        for (std::size_t s = 0; s < spec.packet_sizes.size(); ++s) {
            double sum = 0.0;
            for (std::size_t r = 0; r < spec.replicates; ++r) sum += cells[a * spec.replicates + r][s];
            const double mean = sum / reps;
            double sq = 0.0;
            for (std::size_t r = 0; r < spec.replicates; ++r) {
                const double dev = cells[a * spec.replicates + r][s] - mean;
                sq += dev * dev;
            }
            result.rows.push_back({spec.axis_values[a], spec.packet_sizes[s], mean, std::sqrt(sq / reps)});
        }
    }
    return result;
}

SweepResult run_packet_power_sweep(SweepSpec spec, unsigned threads) {
    return run_with_axis(std::move(spec), SweptAxis::PacketSizeByPower, threads);
}

SweepResult run_frequency_sweep(SweepSpec spec, unsigned threads) {
    return run_with_axis(std::move(spec), SweptAxis::Frequency, threads);
}

SweepResult run_area_sweep(SweepSpec spec, unsigned threads) {
    return run_with_axis(std::move(spec), SweptAxis::Area, threads);
}

SweepResult run_count_sweep(SweepSpec spec, unsigned threads) {
    return run_with_axis(std::move(spec), SweptAxis::UavCount, threads);
}

PowerRatioReport power_ratio_report(const SweepResult& power_sweep) {
    const auto& spec = power_sweep.spec;
    if (spec.swept_axis != SweptAxis::PacketSizeByPower) {
        fail(ErrorKind::InvalidArgument, "power ratio report needs a power sweep");
    }
    if (spec.axis_values.size() < 2) {
        fail(ErrorKind::InvalidArgument, "power ratio report needs at least 2 powers");
    }

    PowerRatioReport report;
    const auto& powers = spec.axis_values;
    for (std::size_t lo = 0; lo < powers.size(); ++lo) {
        for (std::size_t hi = lo + 1; hi < powers.size(); ++hi) {
            PowerPairSummary summary{powers[lo], powers[hi], std::nullopt, std::nullopt};
            if (powers[lo] != 0.0) summary.nominal_ratio = powers[hi] / powers[lo];
            double ratio_sum = 0.0;
            std::size_t ratio_count = 0;
            for (auto size : spec.packet_sizes) {
                const SweepRow* low = power_sweep.find(powers[lo], size);
                const SweepRow* high = power_sweep.find(powers[hi], size);
                if (low == nullptr || high == nullptr) {
                    fail(ErrorKind::InvalidArgument, "power sweep is missing a row");
                }
                PowerRatioCell cell{powers[lo], powers[hi], size, std::nullopt};
                if (high->mean_loss_percent > 0.0) {
                    cell.loss_ratio = low->mean_loss_percent / high->mean_loss_percent;
                    ratio_sum += *cell.loss_ratio;
                    ++ratio_count;
                }
                report.cells.push_back(cell);
            }
            if (ratio_count > 0) summary.mean_loss_ratio = ratio_sum / static_cast<double>(ratio_count);
            report.pairs.push_back(summary);
        }
    }
    return report;
}

} // namespace uavlink
