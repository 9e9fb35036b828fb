#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "repsim/errors.hpp"
#include "repsim/simulate.hpp"

using namespace repsim;

namespace {

const ModelParams kSet1 = validate_params(0.8, 0.8, 0.4, 1.0, 0.99);

} // namespace

TEST_CASE("sample_event frequencies match the branch probabilities") {
    RandomStream rng(42);
    std::array<std::uint64_t, 3> counts{0, 0, 0};
    constexpr int kDraws = 1000000;
    for (int i = 0; i < kDraws; ++i)
        ++counts[static_cast<std::size_t>(sample_event(kSet1, rng))];
    const double positive = static_cast<double>(counts[0]) / kDraws;
    const double negative = static_cast<double>(counts[1]) / kDraws;
    const double indirect = static_cast<double>(counts[2]) / kDraws;
    CHECK(std::abs(positive - 0.64) < 0.002);
    CHECK(std::abs(negative - 0.16) < 0.002);
    CHECK(std::abs(indirect - 0.20) < 0.002);
}

TEST_CASE("sample_event never reports indirectly when p = 1") {
    const ModelParams params = validate_params(0.8, 1.0, 0.4, 1.0, 0.99);
    RandomStream rng(5);
    for (int i = 0; i < 100000; ++i)
        CHECK(sample_event(params, rng) != ObservationEvent::IndirectReport);
}

TEST_CASE("step discounts then adds the event increment") {
    const ReputationState state(80.0, 20.0);

    const StepResult positive = step(state, ObservationEvent::PositiveDirect, kSet1);
    CHECK(positive.state.alpha() == doctest::Approx(80.2).epsilon(1e-12));
    CHECK(positive.state.beta() == doctest::Approx(19.8).epsilon(1e-12));
    CHECK(positive.accepted);

    // R = 0.8 > d: the lie is rejected, only the discount applies
    const StepResult rejected = step(state, ObservationEvent::IndirectReport, kSet1);
    CHECK(rejected.state.alpha() == doctest::Approx(79.2).epsilon(1e-12));
    CHECK(rejected.state.beta() == doctest::Approx(19.8).epsilon(1e-12));
    CHECK_FALSE(rejected.accepted);

    // R = 0.2 <= d: the lie is accepted with weight omega
    const StepResult accepted =
        step(ReputationState(20.0, 80.0), ObservationEvent::IndirectReport, kSet1);
    CHECK(accepted.state.alpha() == doctest::Approx(19.8).epsilon(1e-12));
    CHECK(accepted.state.beta() == doctest::Approx(80.2).epsilon(1e-12));
    CHECK(accepted.accepted);
}

TEST_CASE("scaled_step with N = 1 reproduces step bit for bit") {
    RandomStream rng(29);
    for (int i = 0; i < 500; ++i) {
        const ModelParams params =
            validate_params(rng.u01(), rng.u01(), 0.01 + 0.98 * rng.u01(),
                            0.1 + 3.0 * rng.u01(), 0.01 + 0.98 * rng.u01());
        const ReputationState state(100.0 * rng.u01(), 100.0 * rng.u01() + 1e-9);
        const auto event = static_cast<ObservationEvent>(i % 3);
        const StepResult direct = step(state, event, params);
        const StepResult scaled = scaled_step(state, event, params, 1);
        CHECK(direct.state.alpha() == scaled.state.alpha());
        CHECK(direct.state.beta() == scaled.state.beta());
        CHECK(direct.accepted == scaled.accepted);
    }
}

TEST_CASE("scaled_step shrinks discount and impact by N") {
    const StepResult result = scaled_step(ReputationState(80.0, 20.0),
                                          ObservationEvent::PositiveDirect,
                                          kSet1, 10);
    CHECK(result.state.alpha() == doctest::Approx(80.02).epsilon(1e-12));
    CHECK(result.state.beta() == doctest::Approx(19.98).epsilon(1e-12));

    const StepResult accepted = scaled_step(ReputationState(0.0, 100.0),
                                            ObservationEvent::IndirectReport,
                                            kSet1, 100);
    CHECK(accepted.accepted);
    CHECK(accepted.state.alpha() == 0.0);
    CHECK(accepted.state.beta() == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("scaled_step rejects a zero scale index") {
    CHECK_THROWS_AS(scaled_step(ReputationState(1.0, 1.0),
                                ObservationEvent::PositiveDirect, kSet1, 0),
                    OutOfRangeError);
}

TEST_CASE("random event sequences preserve nonnegativity and the triangle bound") {
    RandomStream rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const ModelParams params =
            validate_params(rng.u01(), rng.u01(), 0.01 + 0.98 * rng.u01(),
                            0.1 + 3.0 * rng.u01(), 0.5 + 0.49 * rng.u01());
        const std::uint64_t scaling = 1 + (trial % 4) * 3;
        ReputationState state = initial_state(rng.u01(), params.u());
        const double cap = std::max(1.0, params.omega());
        for (int n = 0; n < 400; ++n) {
            const ObservationEvent event = sample_event(params, rng);
            const ReputationState previous = state;
            state = scaled_step(state, event, params, scaling).state;
            CHECK(state.alpha() >= 0.0);
            CHECK(state.beta() >= 0.0);
            CHECK(within_triangle(state, params.omega(), params.u()));
            // per-step growth bounds
            CHECK(state.alpha() <= params.u() * previous.alpha() + 1.0 + 1e-12);
            CHECK(state.beta() <= params.u() * previous.beta() + cap + 1e-12);
        }
    }
}

TEST_CASE("testing before or after the discount is the same decision") {
    RandomStream rng(37);
    for (int i = 0; i < 1000; ++i) {
        const ModelParams params =
            validate_params(rng.u01(), rng.u01(), 0.01 + 0.98 * rng.u01(),
                            0.1 + 3.0 * rng.u01(), 0.01 + 0.98 * rng.u01());
        const ReputationState state(100.0 * rng.u01(), 100.0 * rng.u01() + 1e-9);
        const ReputationState discounted(params.u() * state.alpha(),
                                         params.u() * state.beta());
        CHECK(deviation_test(state, params.d()) ==
              deviation_test(discounted, params.d()));
    }
}

TEST_CASE("simulate is a pure function of its config") {
    SimulationConfig config{kSet1};
    config.r0 = 0.0;
    config.n_steps = 5000;
    config.seed = 987654321;
    config.record_timestamps = true;

    const Trajectory first = simulate(config);
    const Trajectory second = simulate(config);
    REQUIRE(first.steps.size() == second.steps.size());
    for (std::size_t i = 0; i < first.steps.size(); ++i) {
        CHECK(first.steps[i].step == second.steps[i].step);
        CHECK(first.steps[i].t == second.steps[i].t);
        CHECK(first.steps[i].alpha == second.steps[i].alpha);
        CHECK(first.steps[i].beta == second.steps[i].beta);
        CHECK(first.steps[i].event == second.steps[i].event);
        CHECK(first.steps[i].accepted == second.steps[i].accepted);
    }
    CHECK(first.final_alpha == second.final_alpha);
    CHECK(first.final_beta == second.final_beta);
}

TEST_CASE("trajectory layout: indices from 1, first record is the initial state") {
    SimulationConfig config{kSet1};
    config.r0 = 0.0;
    config.n_steps = 100;
    config.seed = 3;
    const Trajectory trajectory = simulate(config);
    REQUIRE(trajectory.steps.size() == 100);
    CHECK(trajectory.steps.front().step == 1);
    CHECK(trajectory.steps.back().step == 100);
    CHECK(trajectory.steps.front().alpha == 0.0);
    CHECK(trajectory.steps.front().beta == doctest::Approx(100.0).epsilon(1e-10));
    for (std::size_t i = 1; i < trajectory.steps.size(); ++i)
        CHECK(trajectory.steps[i].step == trajectory.steps[i - 1].step + 1);
}

TEST_CASE("a single step equals one hand-applied transition") {
    for (std::uint64_t seed : {1ULL, 17ULL, 99991ULL}) {
        SimulationConfig config{kSet1};
        config.r0 = 0.25;
        config.n_steps = 1;
        config.seed = seed;
        const Trajectory trajectory = simulate(config);
        REQUIRE(trajectory.steps.size() == 1);

        // replay the stream: one uniform draw selects the event
        RandomStream rng(seed);
        const double v = rng.u01();
        const ReputationState start = initial_state(0.25, kSet1.u());
        double expect_alpha = kSet1.u() * start.alpha();
        double expect_beta = kSet1.u() * start.beta();
        ObservationEvent expect_event;
        if (v < kSet1.p() * kSet1.theta()) {
            expect_event = ObservationEvent::PositiveDirect;
            expect_alpha += 1.0;
        } else if (v < kSet1.p()) {
            expect_event = ObservationEvent::NegativeDirect;
            expect_beta += 1.0;
        } else {
            expect_event = ObservationEvent::IndirectReport;
            if (reputation(start) <= kSet1.d()) expect_beta += kSet1.omega();
        }
        CHECK(trajectory.steps[0].event == expect_event);
        CHECK(trajectory.steps[0].alpha == start.alpha());
        CHECK(trajectory.steps[0].beta == start.beta());
        CHECK(trajectory.final_alpha == expect_alpha);
        CHECK(trajectory.final_beta == expect_beta);
    }
}

TEST_CASE("timestamps are strictly increasing with mean interarrival 1/N") {
    SimulationConfig config{kSet1};
    config.n_steps = 20000;
    config.seed = 12;
    config.record_timestamps = true;
    config.scaling_n = 5;
    const Trajectory trajectory = simulate(config);
    double previous = 0.0;
    for (const StepRecord& record : trajectory.steps) {
        CHECK(record.t > previous);
        previous = record.t;
    }
    const double mean_gap = previous / static_cast<double>(config.n_steps);
    CHECK(mean_gap == doctest::Approx(1.0 / 5.0).epsilon(0.05));
}

TEST_CASE("timestamps stay zero when not recorded") {
    SimulationConfig config{kSet1};
    config.n_steps = 50;
    config.seed = 8;
    const Trajectory trajectory = simulate(config);
    for (const StepRecord& record : trajectory.steps) CHECK(record.t == 0.0);
}

TEST_CASE("with only positive direct observations the counters converge monotonically") {
    const ModelParams deterministic = validate_params(1.0, 1.0, 0.4, 1.0, 0.99);
    SimulationConfig config{deterministic};
    config.r0 = 0.3;
    config.n_steps = 3000;
    config.seed = 4;
    const Trajectory trajectory = simulate(config);
    const double limit = 1.0 / (1.0 - deterministic.u());
    const ReputationState start = initial_state(0.3, deterministic.u());
    double beta_expected = start.beta();
    double previous_alpha = start.alpha();
    for (std::size_t i = 1; i < trajectory.steps.size(); ++i) {
        CHECK(trajectory.steps[i].alpha >= previous_alpha);
        CHECK(trajectory.steps[i].alpha <= limit * (1.0 + 1e-12));
        previous_alpha = trajectory.steps[i].alpha;
        beta_expected *= deterministic.u();
        CHECK(trajectory.steps[i].beta == doctest::Approx(beta_expected).epsilon(1e-9));
    }
    CHECK(trajectory.final_alpha == doctest::Approx(limit).epsilon(1e-10));
    CHECK(trajectory.final_beta < 1e-10 * limit);
}

TEST_CASE("the long-run average sits at the subcritical equilibrium") {
    SimulationConfig config{kSet1};
    config.r0 = 0.0;
    config.n_steps = 100000;
    config.seed = 777;
    const Trajectory trajectory = simulate(config);
    const std::size_t burn_in = 20000;
    double sum_alpha = 0.0;
    double sum_beta = 0.0;
    for (std::size_t i = burn_in; i < trajectory.steps.size(); ++i) {
        sum_alpha += trajectory.steps[i].alpha;
        sum_beta += trajectory.steps[i].beta;
    }
    const double n = static_cast<double>(trajectory.steps.size() - burn_in);
    CHECK(std::abs(sum_alpha / n - 64.0) / 64.0 < 0.05);
    CHECK(std::abs(sum_beta / n - 16.0) / 16.0 < 0.05);
}

TEST_CASE("simulate validates its config") {
    SimulationConfig config{kSet1};
    config.n_steps = 0;
    CHECK_THROWS_AS(simulate(config), OutOfRangeError);
    config.n_steps = 10;
    config.scaling_n = 0;
    CHECK_THROWS_AS(simulate(config), OutOfRangeError);
    config.scaling_n = 1;
    config.r0 = 1.5;
    CHECK_THROWS_AS(simulate(config), OutOfRangeError);
}
