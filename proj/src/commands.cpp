#include "uavlink/commands.hpp"

#include <array>

#include "uavlink/emit.hpp"
#include "uavlink/error.hpp"

namespace uavlink {

namespace {

constexpr std::array kCommands{
    Subcommand::Topology,  Subcommand::SweepPower, Subcommand::SweepFrequency, Subcommand::SweepArea,
    Subcommand::SweepCount, Subcommand::Fit,       Subcommand::Predict,        Subcommand::Adapt,
};

std::string render_sweep(const RunConfig& config, SweptAxis axis) {
    return emit_table(run_sweep(config.sweep_spec(axis), config.threads), config.format);
}

CurveFamily fit_power_sweep(const RunConfig& config) {
    const auto result = run_sweep(config.sweep_spec(SweptAxis::PacketSizeByPower), config.threads);
    std::vector<LossCurve> curves;
    for (double power : result.spec.axis_values) {
        std::vector<FitPoint> points;
        for (const auto& row : result.rows) {
            if (row.axis_value == power) {
                points.push_back({static_cast<double>(row.packet_size_bits), row.mean_loss_percent});
            }
        }
        curves.push_back(fit_log_curve(points, power));
    }
    return CurveFamily(std::move(curves));
}

} // namespace

std::string_view to_string(Subcommand command) {
    switch (command) {
    case Subcommand::Topology: return "topology";
    case Subcommand::SweepPower: return "sweep-power";
    case Subcommand::SweepFrequency: return "sweep-frequency";
    case Subcommand::SweepArea: return "sweep-area";
    case Subcommand::SweepCount: return "sweep-count";
    case Subcommand::Fit: return "fit";
    case Subcommand::Predict: return "predict";
    case Subcommand::Adapt: return "adapt";
    }
    return "unknown";
}

std::optional<Subcommand> parse_subcommand(std::string_view name) {
    for (auto c : kCommands) {
        if (to_string(c) == name) return c;
    }
    return std::nullopt;
}

std::span<const Subcommand> all_subcommands() { return kCommands; }

std::string render_subcommand(Subcommand command, const RunConfig& config) {
    switch (command) {
    case Subcommand::Topology:
        return emit_table(generate_topology(config.seed, config.num_uavs, config.area, config.num_pairs),
                          config.format);
    case Subcommand::SweepPower: return render_sweep(config, SweptAxis::PacketSizeByPower);
    case Subcommand::SweepFrequency: return render_sweep(config, SweptAxis::Frequency);
    case Subcommand::SweepArea: return render_sweep(config, SweptAxis::Area);
    case Subcommand::SweepCount: return render_sweep(config, SweptAxis::UavCount);
    case Subcommand::Fit: return emit_table(fit_power_sweep(config), config.format);
    case Subcommand::Predict:
        return emit_table(predict(config.target_loss_percent, config.target_power_dbm, config.curve_family),
                          config.format);
    case Subcommand::Adapt: return emit_table(run_adaptation(config.policy, config.curve_family), config.format);
    }
    fail(ErrorKind::InvalidArgument, "unknown subcommand");
}

CommandOutcome run_subcommand(Subcommand command, const RunConfig& config) {
    CommandOutcome outcome;
    try {
        auto document = render_subcommand(command, config);
        if (config.out.empty()) {
            outcome.document = std::move(document);
        } else {
            write_file_atomically(config.out, document);
        }
    } catch (const Error& e) {
        outcome.exit_code = exit_code(e.kind());
        outcome.diagnostic = std::string(to_string(command)) + ": " + std::string(to_string(e.kind())) + ": " + e.what();
    }
    return outcome;
}

} // namespace uavlink
