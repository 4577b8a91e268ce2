#include "uavlink/adaptation.hpp"

#include <string>

#include "uavlink/error.hpp"

namespace uavlink {

std::string_view to_string(TraceEvent event) {
    switch (event) {
    case TraceEvent::None: return "none";
    case TraceEvent::Escalated: return "escalated";
    case TraceEvent::Terminated: return "terminated";
    }
    return "unknown";
}

void validate_policy(const AdaptationPolicy& policy, const CurveFamily& family) {
    if (policy.rungs.empty()) fail(ErrorKind::InvalidArgument, "adaptation policy has no rungs");
    for (std::size_t i = 0; i < policy.rungs.size(); ++i) {
        const auto& rung = policy.rungs[i];
        if (i > 0 && !(rung.power_dbm > policy.rungs[i - 1].power_dbm)) {
            fail(ErrorKind::InvalidArgument, "rung powers must be strictly increasing");
        }
        if (family.find(rung.power_dbm) == nullptr) {
            fail(ErrorKind::InvalidArgument,
                 "no loss curve for rung power " + std::to_string(rung.power_dbm) + " dBm");
        }
    }
    if (policy.initial_packet_bits < 1) fail(ErrorKind::InvalidArgument, "initial packet size must be >= 1 bit");
    if (policy.growth_step_bits < 0) fail(ErrorKind::InvalidArgument, "growth step must be >= 0");
    if (policy.backoff_bits < 0) fail(ErrorKind::InvalidArgument, "backoff must be >= 0");
    if (policy.max_ticks < 1) fail(ErrorKind::InvalidArgument, "max_ticks must be >= 1");
}

ControllerState initial_state(const AdaptationPolicy& policy) {
    return {0, policy.initial_packet_bits, 0, false};
}

StepResult step(const ControllerState& state, const AdaptationPolicy& policy, const CurveFamily& family) {
    if (state.terminated) fail(ErrorKind::InvalidArgument, "controller already terminated");
    if (state.rung >= policy.rungs.size()) fail(ErrorKind::InvalidArgument, "rung index out of range");

    const PowerRung& rung = policy.rungs[state.rung];
    const LossCurve* curve = family.find(rung.power_dbm);
    if (curve == nullptr) {
        fail(ErrorKind::InvalidArgument, "no loss curve for rung power " + std::to_string(rung.power_dbm) + " dBm");
    }

    StepResult out{state, {}};
    out.sample.tick = state.tick;
    out.sample.packet_bits = state.packet_bits;
    out.sample.loss_percent = evaluate_curve(*curve, static_cast<double>(state.packet_bits));
    out.sample.power_dbm = rung.power_dbm;

    ControllerState& next = out.next;
    if (out.sample.loss_percent >= rung.loss_threshold_percent) {
        if (state.rung + 1 == policy.rungs.size()) {
            out.sample.event = TraceEvent::Terminated;
            next.terminated = true;
            return out;
        }
        out.sample.event = TraceEvent::Escalated;
        next.packet_bits -= policy.backoff_bits;
        next.rung += 1;
        if (next.packet_bits < 1) {
            fail(ErrorKind::PolicyDegenerate, "backoff at tick " + std::to_string(state.tick) +
                                                  " leaves a packet smaller than 1 bit");
        }
    }
    next.packet_bits += policy.growth_step_bits;
    next.tick += 1;
    return out;
}

std::vector<TraceSample> run_adaptation(const AdaptationPolicy& policy, const CurveFamily& family) {
    validate_policy(policy, family);
    std::vector<TraceSample> trace;
    ControllerState state = initial_state(policy);
    while (static_cast<std::int64_t>(trace.size()) < policy.max_ticks) {
        auto [next, sample] = step(state, policy, family);
        trace.push_back(sample);
        if (next.terminated) return trace;
        state = next;
    }
    fail(ErrorKind::NonTermination,
         "adaptation did not terminate within " + std::to_string(policy.max_ticks) + " ticks");
}

TraceSummary summarize_trace(const std::vector<TraceSample>& trace) {
    if (trace.empty()) fail(ErrorKind::InvalidArgument, "trace is empty");
    TraceSummary summary;
    summary.peak = trace.front();
    summary.final_sample = trace.back();
    for (const auto& s : trace) {
        if (summary.dwell.empty() || summary.dwell.back().power_dbm != s.power_dbm) {
            summary.dwell.push_back({s.power_dbm, 0});
        }
        summary.dwell.back().ticks += 1;
        if (s.loss_percent > summary.peak.loss_percent) summary.peak = s;
        if (s.event == TraceEvent::Escalated) ++summary.escalations;
        if (s.event == TraceEvent::Terminated) summary.terminated = true;
    }
    return summary;
}

} // namespace uavlink
