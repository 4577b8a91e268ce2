#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "uavlink/adaptation.hpp"
#include "uavlink/emit.hpp"
#include "uavlink/error.hpp"
#include "uavlink/rng.hpp"

using namespace uavlink;

TEST_CASE("default policy") {
    const AdaptationPolicy policy;
    CHECK(policy.rungs == std::vector<PowerRung>{{5.0, 50.0}, {7.0, 40.0}, {9.0, 30.0}});
    CHECK(policy.initial_packet_bits == 20);
    CHECK(policy.growth_step_bits == 10);
    CHECK(policy.backoff_bits == 20);
    CHECK(policy.max_ticks == 10000);
}

TEST_CASE("single steps from the default start") {
    const AdaptationPolicy policy;
    const auto family = reference_curve_family();

    auto [s1, first] = step(initial_state(policy), policy, family);
    CHECK(first.tick == 0);
    CHECK(first.packet_bits == 20);
    CHECK(first.loss_percent == doctest::Approx(46.370979460167135).epsilon(1e-14));
    CHECK(first.power_dbm == 5.0);
    CHECK(first.event == TraceEvent::None);
    CHECK(s1 == ControllerState{1, 30, 0, false});

    auto [s2, second] = step(s1, policy, family);
    auto [s3, third] = step(s2, policy, family);
    CHECK(third.tick == 2);
    CHECK(third.packet_bits == 40);
    CHECK(third.loss_percent == doctest::Approx(6.8 * std::log(40.0) + 26.0).epsilon(1e-14));
    CHECK(third.event == TraceEvent::Escalated);
    CHECK(s3 == ControllerState{3, 30, 1, false});
}

TEST_CASE("zero threshold on a single rung terminates immediately") {
    AdaptationPolicy policy;
    policy.rungs = {{5.0, 0.0}};
    const auto trace = run_adaptation(policy, reference_curve_family());
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].event == TraceEvent::Terminated);
    const auto [next, sample] = step(initial_state(policy), policy, reference_curve_family());
    CHECK(next.terminated);
    CHECK_THROWS_AS(step(next, policy, reference_curve_family()), Error);
}

TEST_CASE("default run") {
    const auto trace = run_adaptation(AdaptationPolicy{}, reference_curve_family());
    REQUIRE(trace.size() == 37);
    std::vector<std::int64_t> escalation_ticks;
    for (const auto& s : trace) {
        if (s.event == TraceEvent::Escalated) escalation_ticks.push_back(s.tick);
    }
    CHECK(escalation_ticks == std::vector<std::int64_t>{2, 16});
    CHECK(trace[16].packet_bits == 160);
    CHECK(trace[16].loss_percent == doctest::Approx(40.033734088160166).epsilon(1e-13));
    CHECK(trace[17].packet_bits == 150);
    CHECK(trace[17].power_dbm == 9.0);
    CHECK(trace.back().tick == 36);
    CHECK(trace.back().packet_bits == 340);
    CHECK(trace.back().loss_percent == doctest::Approx(30.139462829183287).epsilon(1e-13));
    CHECK(trace.back().event == TraceEvent::Terminated);

    CHECK(emit_table(trace, OutputFormat::Csv) == testing::read_file(testing::golden("adapt_default.csv")));
}

TEST_CASE("summary") {
    const auto summary = summarize_trace(run_adaptation(AdaptationPolicy{}, reference_curve_family()));
    REQUIRE(summary.dwell.size() == 3);
    CHECK(summary.dwell[0].power_dbm == 5.0);
    CHECK(summary.dwell[0].ticks == 3);
    CHECK(summary.dwell[1].ticks == 14);
    CHECK(summary.dwell[2].ticks == 20);
    CHECK(summary.peak.tick == 2);
    CHECK(summary.peak.loss_percent == doctest::Approx(51.08438028797477).epsilon(1e-13));
    CHECK(summary.final_sample.tick == 36);
    CHECK(summary.escalations == 2);
    CHECK(summary.terminated);

    const TraceSample only{4, 70, 12.5, 7.0, TraceEvent::None};
    const auto single = summarize_trace({only});
    CHECK(single.peak == only);
    CHECK(single.final_sample == only);
    CHECK(single.dwell.size() == 1);
    CHECK(single.dwell[0].ticks == 1);
    CHECK_FALSE(single.terminated);

    CHECK_THROWS_AS(summarize_trace({}), Error);
}

TEST_CASE("error paths") {
    const auto family = reference_curve_family();
    SUBCASE("backoff below one bit") {
        AdaptationPolicy policy;
        policy.initial_packet_bits = 5;
        policy.rungs = {{5.0, 0.0}, {7.0, 100.0}};
        try {
            run_adaptation(policy, family);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::PolicyDegenerate);
        }
    }
    SUBCASE("max ticks") {
        AdaptationPolicy policy;
        policy.max_ticks = 36;
        try {
            run_adaptation(policy, family);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NonTermination);
        }
        policy.max_ticks = 37;
        CHECK(run_adaptation(policy, family).size() == 37);
    }
    SUBCASE("invalid policies") {
        AdaptationPolicy policy;
        policy.rungs = {};
        CHECK_THROWS_AS(validate_policy(policy, family), Error);
        policy.rungs = {{7.0, 40.0}, {5.0, 50.0}};
        CHECK_THROWS_AS(validate_policy(policy, family), Error);
        policy.rungs = {{6.0, 40.0}};
        CHECK_THROWS_AS(validate_policy(policy, family), Error);
        policy = AdaptationPolicy{};
        policy.initial_packet_bits = 0;
        CHECK_THROWS_AS(validate_policy(policy, family), Error);
    }
}

TEST_CASE("trace invariants over random policies") {
    const auto family = reference_curve_family();
    Rng rng(404);
    int completed = 0;
    for (int trial = 0; trial < 300; ++trial) {
        AdaptationPolicy policy;
        std::vector<PowerRung> rungs;
        for (double p : {5.0, 7.0, 9.0}) {
            if (rng.next_uniform() < 0.7) rungs.push_back({p, 1.0 + 70.0 * rng.next_uniform()});
        }
        if (rungs.empty()) rungs.push_back({9.0, 20.0});
        policy.rungs = rungs;
        policy.initial_packet_bits = 1 + static_cast<std::int64_t>(rng.next_uniform() * 200);
        policy.growth_step_bits = 1 + static_cast<std::int64_t>(rng.next_uniform() * 50);
        policy.backoff_bits = static_cast<std::int64_t>(rng.next_uniform() * 40);

        std::vector<TraceSample> trace;
        try {
            trace = run_adaptation(policy, family);
        } catch (const Error& e) {
            // High thresholds with slow growth can exceed max_ticks.
            REQUIRE((e.kind() == ErrorKind::PolicyDegenerate || e.kind() == ErrorKind::NonTermination));
            continue;
        }
        ++completed;
        std::size_t escalations = 0;
        std::size_t terminations = 0;
        for (std::size_t i = 0; i < trace.size(); ++i) {
            const auto& s = trace[i];
            REQUIRE(s.tick == static_cast<std::int64_t>(i));
            REQUIRE(s.loss_percent == evaluate_curve(*family.find(s.power_dbm), static_cast<double>(s.packet_bits)));
            if (i > 0) {
                const auto& prev = trace[i - 1];
                REQUIRE(s.power_dbm >= prev.power_dbm);
                if (prev.event == TraceEvent::None) {
                    REQUIRE(s.power_dbm == prev.power_dbm);
                    REQUIRE(s.packet_bits == prev.packet_bits + policy.growth_step_bits);
                } else {
                    REQUIRE(s.packet_bits == prev.packet_bits - policy.backoff_bits + policy.growth_step_bits);
                }
            }
            if (s.event == TraceEvent::Escalated) ++escalations;
            if (s.event == TraceEvent::Terminated) ++terminations;
        }
        REQUIRE(escalations <= policy.rungs.size() - 1);
        REQUIRE(terminations == 1);
        REQUIRE(trace.back().event == TraceEvent::Terminated);
    }
    CHECK(completed > 150);
}
