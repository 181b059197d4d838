// Copyright 2026 The wristsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <doctest.h>
#include <numbers>
#include <random>

#include "wristsim/config.hpp"
#include "wristsim/metrics.hpp"

using namespace wristsim;

namespace {

BeamParams default_beam() { return make_beam_params(Config{}); }

/// Proportional-plus-bias controller u(e) = bias - gain * e expressed as a
/// single linear neuron behind the given normalizer.
Network proportional_net(const Normalizer& normalizer, double bias, double gain) {
    Network net({1, 1});
    const double in_span = normalizer.input.max - normalizer.input.min;
    const double out_span = normalizer.output.max - normalizer.output.min;
    // u = out_min + (w e_norm + b) out_span with e = in_min + e_norm in_span.
    const double w = -gain * in_span / out_span;
    const double b =
        (bias - gain * normalizer.input.min - normalizer.output.min) / out_span;
    net.set_weight(0, 0, 0, w);
    net.set_bias(0, 0, b);
    return net;
}

}  // namespace

TEST_CASE("direction names and tendon pairs") {
    CHECK(direction_from_string("ulnar") == Direction::kUlnarDeviation);
    CHECK(direction_from_string("radial") == Direction::kRadialDeviation);
    CHECK(to_string(Direction::kFlexion) == "flexion");
    CHECK_THROWS_AS(direction_from_string("sideways"), std::invalid_argument);

    const TendonCommand ulnar = allocate_tendons(Direction::kUlnarDeviation, 2.0);
    CHECK(ulnar.tendon4 == 1.0);
    CHECK(ulnar.tendon5 == 1.0);
    CHECK(ulnar.tendon1 == 0.0);
    CHECK(ulnar.tendon2 == 0.0);
    CHECK(!ulnar.slack);

    const TendonCommand radial = allocate_tendons(Direction::kRadialDeviation, 3.0);
    CHECK(radial.tendon1 == 1.5);
    CHECK(radial.tendon2 == 1.5);
    const TendonCommand extension = allocate_tendons(Direction::kExtension, 1.0);
    CHECK(extension.tendon1 == 0.5);
    CHECK(extension.tendon4 == 0.5);
    const TendonCommand flexion = allocate_tendons(Direction::kFlexion, 1.0);
    CHECK(flexion.tendon2 == 0.5);
    CHECK(flexion.tendon5 == 0.5);

    const TendonCommand zero = allocate_tendons(Direction::kRadialDeviation, 0.0);
    CHECK(zero.tendon1 == 0.0);
    CHECK(zero.tendon2 == 0.0);
    CHECK(!zero.slack);

    const TendonCommand slack = allocate_tendons(Direction::kFlexion, -0.5);
    CHECK(slack.slack);
    CHECK(slack.tendon2 == 0.0);
    CHECK(slack.tendon5 == 0.0);

    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        const double u = -1.0 + 3.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        for (Direction direction : kAllDirections) {
            const TendonCommand cmd = allocate_tendons(direction, u);
            const double total = cmd.tendon1 + cmd.tendon2 + cmd.tendon4 + cmd.tendon5;
            CHECK(total == doctest::Approx(std::max(u, 0.0)).epsilon(1e-12));
            CHECK(cmd.tendon1 >= 0.0);
            CHECK(cmd.tendon2 >= 0.0);
            CHECK(cmd.tendon4 >= 0.0);
            CHECK(cmd.tendon5 >= 0.0);
        }
    }
}

TEST_CASE("commanded angles convert to step amplitudes") {
    const BeamParams params = default_beam();
    const double small = reference_for(Direction::kUlnarDeviation, 1e-6, params);
    CHECK(small >= 0.0);
    CHECK(small < 1e-6);

    CHECK(reference_for(Direction::kUlnarDeviation, std::numbers::pi / 6.0, params) ==
          doctest::Approx(0.025587263083736787).epsilon(1e-12));
    CHECK(reference_for(Direction::kFlexion, std::numbers::pi / 2.0, params) ==
          doctest::Approx(0.1 / (std::numbers::pi / 2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(reference_for(Direction::kFlexion, 0.0, params), std::invalid_argument);
    CHECK_THROWS_AS(reference_for(Direction::kFlexion, -0.3, params), std::invalid_argument);
    CHECK_THROWS_AS(reference_for(Direction::kFlexion, 2.0, params), std::invalid_argument);
}

TEST_CASE("plant model keeps the beam's static gain at DC") {
    const Config config;
    const PlantModel plant = make_plant(config);
    CHECK(std::abs(plant.system.dc_gain() - plant.static_gain) <= 1e-9);
    CHECK(plant.static_gain == doctest::Approx(0.025).epsilon(1e-12));
    CHECK_THROWS_AS(PlantModel::from_beam(default_beam(), 0.0, 3.0, 1e-3),
                    std::invalid_argument);
}

TEST_CASE("zero network and zero reference stay at the origin") {
    const Config config;
    const Network net({1, 5, 5, 7, 1});
    const Normalizer normalizer{Range(-1.0, 1.0), Range(0.0, 1.0)};
    const SimTrace trace = run_nn_mrac_amplitude(
        net, normalizer, make_plant(config), make_reference_model(config),
        Direction::kUlnarDeviation, 0.0, 1.0, OnlineOptions{});
    CHECK(trace.size() == 1001);
    for (std::size_t k = 0; k < trace.size(); ++k) {
        CHECK(trace.y_plant[k] == 0.0);
        CHECK(trace.e[k] == 0.0);
        CHECK(trace.u_force[k] == 0.0);
    }
}

TEST_CASE("proportional controller net tracks the reference step") {
    const Config config;
    const BeamParams params = default_beam();
    const double amplitude =
        reference_for(Direction::kUlnarDeviation, std::numbers::pi / 6.0, params);
    const double bias = amplitude / static_gain(params);
    const Normalizer normalizer{Range(-0.01, 0.01), Range(0.0, 2.0)};
    const Network net = proportional_net(normalizer, bias, 100.0);

    const SimTrace trace = run_nn_mrac(net, normalizer, make_plant(config),
                                       make_reference_model(config),
                                       Direction::kUlnarDeviation, std::numbers::pi / 6.0,
                                       10.0, OnlineOptions{}, params);
    CHECK(trace.size() == 10001);
    // Self-consistency and tendon bookkeeping.
    for (std::size_t k = 0; k < trace.size(); ++k) {
        CHECK(std::abs(trace.e[k] - (trace.y_plant[k] - trace.y_ref[k])) <= 1e-12);
        CHECK(trace.tendons[k].tendon4 >= 0.0);
        CHECK(trace.tendons[k].tendon1 == 0.0);
    }
    const MetricsReport metrics_report = compute_metrics(trace, 0.02, 1.0);
    CHECK(metrics_report.settled);
    CHECK(metrics_report.settling_time < 5.0);
    CHECK(metrics_report.rmse < 2e-3);
    CHECK(metrics_report.steady_state_error < 1e-4);
    // Final second of the run hugs the reference.
    for (std::size_t k = trace.size() - 1000; k < trace.size(); ++k) {
        CHECK(std::abs(trace.e[k]) < 1e-2);
    }
}

TEST_CASE("closed-loop runs are deterministic") {
    const Config config;
    const BeamParams params = default_beam();
    const Normalizer normalizer{Range(-0.01, 0.01), Range(0.0, 2.0)};
    const Network net = proportional_net(normalizer, 1.0, 80.0);
    auto run_once = [&]() {
        return run_nn_mrac(net, normalizer, make_plant(config),
                           make_reference_model(config), Direction::kFlexion,
                           0.4, 3.0, OnlineOptions{}, params);
    };
    const SimTrace a = run_once();
    const SimTrace b = run_once();
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a.y_plant[k] == b.y_plant[k]);
        CHECK(a.u_force[k] == b.u_force[k]);
    }
}

TEST_CASE("online adaptation flag isolation") {
    const Config config;
    const BeamParams params = default_beam();
    const Normalizer normalizer{Range(-0.01, 0.01), Range(0.0, 2.0)};
    const Network net = proportional_net(normalizer, 1.0, 80.0);

    OnlineOptions off_a{false, 1e-3};
    OnlineOptions off_b{false, 0.5};
    const SimTrace a = run_nn_mrac(net, normalizer, make_plant(config),
                                   make_reference_model(config), Direction::kUlnarDeviation,
                                   0.5, 2.0, off_a, params);
    const SimTrace b = run_nn_mrac(net, normalizer, make_plant(config),
                                   make_reference_model(config), Direction::kUlnarDeviation,
                                   0.5, 2.0, off_b, params);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a.y_plant[k] == b.y_plant[k]);
    }

    // Turning it on changes the trajectory (and must stay finite).
    OnlineOptions on{true, 1e-3};
    const SimTrace c = run_nn_mrac(net, normalizer, make_plant(config),
                                   make_reference_model(config), Direction::kUlnarDeviation,
                                   0.5, 2.0, on, params);
    bool differs = false;
    for (std::size_t k = 0; k < c.size(); ++k) {
        differs = differs || c.y_plant[k] != a.y_plant[k];
        CHECK(std::isfinite(c.y_plant[k]));
    }
    CHECK(differs);
}

TEST_CASE("loop divergence carries the partial trace") {
    const Config config;
    const Normalizer normalizer{Range(-1e-300, 1e-300), Range(0.0, 1e308)};
    Network net({1, 1});
    net.set_bias(0, 0, 1.0);  // saturates the output range immediately
    try {
        run_nn_mrac_amplitude(net, normalizer, make_plant(config),
                              make_reference_model(config), Direction::kUlnarDeviation,
                              0.02, 5.0, OnlineOptions{});
        FAIL("expected LoopDivergence");
    } catch (const LoopDivergence& err) {
        CHECK(err.partial_trace.size() > 0);
        CHECK(err.partial_trace.size() < 5001);
    }
}

TEST_CASE("all four directions run with shared settings") {
    const Config config;
    const BeamParams params = default_beam();
    const Normalizer normalizer{Range(-0.01, 0.01), Range(0.0, 2.0)};
    const double amplitude =
        reference_for(Direction::kUlnarDeviation, std::numbers::pi / 6.0, params);
    const Network net = proportional_net(normalizer, amplitude / static_gain(params), 100.0);

    const auto traces = run_all_directions(net, normalizer, make_plant(config),
                                           make_reference_model(config),
                                           std::numbers::pi / 6.0, 2.0, OnlineOptions{},
                                           params);
    REQUIRE(traces.size() == 4);
    std::size_t length = 0;
    for (const auto& [direction, trace] : traces) {
        if (length == 0) length = trace.size();
        CHECK(trace.size() == length);
        CHECK(trace.direction == direction);
    }
    // Map iteration follows the enum declaration order.
    auto it = traces.begin();
    CHECK((it++)->first == Direction::kRadialDeviation);
    CHECK((it++)->first == Direction::kUlnarDeviation);
    CHECK((it++)->first == Direction::kFlexion);
    CHECK((it++)->first == Direction::kExtension);
}
