#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "uavlink/curve_fit.hpp"

namespace uavlink {

/// One level of the power ladder and the loss that forces leaving it.
struct PowerRung {
    double power_dbm = 0.0;
    double loss_threshold_percent = 0.0;

    bool operator==(const PowerRung&) const = default;
};

struct AdaptationPolicy {
    std::vector<PowerRung> rungs{{5.0, 50.0}, {7.0, 40.0}, {9.0, 30.0}};
    std::int64_t initial_packet_bits = 20;
    std::int64_t growth_step_bits = 10;
    std::int64_t backoff_bits = 20;
    std::int64_t max_ticks = 10000;

    bool operator==(const AdaptationPolicy&) const = default;
};

/// Checks the ladder shape and that every rung power has a curve.
void validate_policy(const AdaptationPolicy& policy, const CurveFamily& family);

enum class TraceEvent { None, Escalated, Terminated };

std::string_view to_string(TraceEvent event);

struct TraceSample {
    std::int64_t tick = 0;  ///< minutes
    std::int64_t packet_bits = 0;
    double loss_percent = 0.0;
    double power_dbm = 0.0;
    TraceEvent event = TraceEvent::None;

    bool operator==(const TraceSample&) const = default;
};

struct ControllerState {
    std::int64_t tick = 0;
    std::int64_t packet_bits = 0;
    std::size_t rung = 0;
    bool terminated = false;

    bool operator==(const ControllerState&) const = default;
};

ControllerState initial_state(const AdaptationPolicy& policy);

struct StepResult {
    ControllerState next;
    TraceSample sample;
};

/// One tick: measure the loss for the current (packet size, power), record
/// it, escalate (back off, next rung) or terminate on the last rung when the
/// threshold is reached, then grow the packet and advance the clock.
StepResult step(const ControllerState& state, const AdaptationPolicy& policy, const CurveFamily& family);

/// Steps until the last rung's threshold is crossed. Throws NonTermination
/// if max_ticks samples pass without that happening.
std::vector<TraceSample> run_adaptation(const AdaptationPolicy& policy, const CurveFamily& family);

struct RungDwell {
    double power_dbm = 0.0;
    std::int64_t ticks = 0;
};

struct TraceSummary {
    std::vector<RungDwell> dwell;  ///< in order of first appearance
    TraceSample peak;              ///< earliest sample with the highest loss
    TraceSample final_sample;
    std::size_t escalations = 0;
    bool terminated = false;
};

TraceSummary summarize_trace(const std::vector<TraceSample>& trace);

} // namespace uavlink
