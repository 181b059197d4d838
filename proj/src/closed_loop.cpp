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

#include "wristsim/closed_loop.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "wristsim/textio.hpp"

namespace wristsim {

Direction direction_from_string(const std::string& name) {
    if (name == "radial") return Direction::kRadialDeviation;
    if (name == "ulnar") return Direction::kUlnarDeviation;
    if (name == "flexion") return Direction::kFlexion;
    if (name == "extension") return Direction::kExtension;
    throw std::invalid_argument("unknown direction '" + name +
                                "' (expected radial, ulnar, flexion or extension)");
}

std::string to_string(Direction direction) {
    switch (direction) {
        case Direction::kRadialDeviation: return "radial";
        case Direction::kUlnarDeviation: return "ulnar";
        case Direction::kFlexion: return "flexion";
        case Direction::kExtension: return "extension";
    }
    return "unknown";
}

TendonCommand allocate_tendons(Direction direction, double force) {
    if (!std::isfinite(force)) {
        throw std::invalid_argument("allocate_tendons: force must be finite");
    }
    TendonCommand cmd;
    if (force < 0.0) {
        cmd.slack = true;
        return cmd;
    }
    const double half = 0.5 * force;
    switch (direction) {
        case Direction::kRadialDeviation:
            cmd.tendon1 = half;
            cmd.tendon2 = half;
            break;
        case Direction::kUlnarDeviation:
            cmd.tendon4 = half;
            cmd.tendon5 = half;
            break;
        case Direction::kExtension:
            cmd.tendon1 = half;
            cmd.tendon4 = half;
            break;
        case Direction::kFlexion:
            cmd.tendon2 = half;
            cmd.tendon5 = half;
            break;
    }
    return cmd;
}

PlantModel PlantModel::from_beam(const BeamParams& params, double zeta, double omega_n,
                                 double dt) {
    if (!(zeta > 0.0) || !(omega_n > 0.0) || !std::isfinite(zeta) ||
        !std::isfinite(omega_n)) {
        throw std::invalid_argument("plant dynamics require zeta > 0 and omega_n > 0");
    }
    const double gain = wristsim::static_gain(params);
    TransferFunction tf({gain * omega_n * omega_n},
                        {1.0, 2.0 * zeta * omega_n, omega_n * omega_n});
    return PlantModel{gain, zeta, omega_n, LTISystem(tf, dt)};
}

double reference_for(Direction, double angle, const BeamParams& params) {
    if (!std::isfinite(angle) || angle <= 0.0 || angle > std::numbers::pi / 2.0) {
        throw std::invalid_argument("bending angle must lie in (0, pi/2]");
    }
    const double radius = params.length / angle;
    return radius * (1.0 - std::cos(angle));
}

SimTrace run_nn_mrac_amplitude(const Network& net, const Normalizer& normalizer,
                               PlantModel plant, LTISystem refmodel, Direction direction,
                               double amplitude, double duration,
                               const OnlineOptions& online) {
    if (plant.system.dt() != refmodel.dt()) {
        throw std::invalid_argument("closed loop: plant and reference model must share dt");
    }
    if (net.input_size() != 1 || net.output_size() != 1) {
        throw std::invalid_argument("closed loop: network must be 1-in/1-out");
    }
    if (!(duration > 0.0)) {
        throw std::invalid_argument("closed loop: duration must be > 0");
    }
    if (!std::isfinite(amplitude)) {
        throw std::invalid_argument("closed loop: non-finite step amplitude");
    }

    const double dt = plant.system.dt();
    const double ref_scale = 1.0 / refmodel.dc_gain();
    const long n = std::lround(duration / dt);
    const double out_span = normalizer.output.max - normalizer.output.min;

    plant.system.reset();
    refmodel.reset();
    Network controller = net;  // online adaptation works on a private copy

    SimTrace trace;
    trace.dt = dt;
    trace.direction = direction;
    const std::size_t count = static_cast<std::size_t>(n) + 1;
    trace.t.reserve(count);
    trace.r.reserve(count);
    trace.y_ref.reserve(count);
    trace.y_plant.reserve(count);
    trace.e.reserve(count);
    trace.u_force.reserve(count);
    trace.tendons.reserve(count);

    double y_plant = plant.system.output();
    double y_ref = refmodel.output();
    for (long k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) * dt;
        const double e = y_plant - y_ref;
        if (!std::isfinite(e)) {
            throw LoopDivergence("closed loop diverged at t = " + format_double(t),
                                 std::move(trace));
        }
        const double e_norm = normalizer.input.normalize(e);
        if (!std::isfinite(e_norm)) {
            throw LoopDivergence("normalized error overflowed at t = " + format_double(t),
                                 std::move(trace));
        }
        const double u = normalizer.output.denormalize(controller.forward1(e_norm));
        if (!std::isfinite(u)) {
            throw LoopDivergence("controller force non-finite at t = " + format_double(t),
                                 std::move(trace));
        }
        const TendonCommand tendons = allocate_tendons(direction, u);

        trace.t.push_back(t);
        trace.r.push_back(amplitude);
        trace.y_ref.push_back(y_ref);
        trace.y_plant.push_back(y_plant);
        trace.e.push_back(e);
        trace.u_force.push_back(u);
        trace.tendons.push_back(tendons);
        trace.slack_warning = trace.slack_warning || tendons.slack;

        if (k == n) break;
        if (online.enabled) {
            // d(1/2 e^2)/d(params) ~ e * g_dc * d(u)/d(params); the force
            // sensitivity picks up the output denormalization span.
            Eigen::VectorXd x(1);
            x(0) = e_norm;
            const Eigen::VectorXd grad = controller.jacobian(x).row(0).transpose();
            controller.set_parameters(controller.parameters() -
                                      online.eta * e * plant.static_gain * out_span * grad);
        }
        y_plant = plant.system.step(u);
        y_ref = refmodel.step(amplitude * ref_scale);
    }
    return trace;
}

SimTrace run_nn_mrac(const Network& net, const Normalizer& normalizer, PlantModel plant,
                     LTISystem refmodel, Direction direction, double angle,
                     double duration, const OnlineOptions& online,
                     const BeamParams& params) {
    const double amplitude = reference_for(direction, angle, params);
    return run_nn_mrac_amplitude(net, normalizer, std::move(plant), std::move(refmodel),
                                 direction, amplitude, duration, online);
}

std::map<Direction, SimTrace> run_all_directions(const Network& net,
                                                 const Normalizer& normalizer,
                                                 const PlantModel& plant,
                                                 const LTISystem& refmodel, double angle,
                                                 double duration,
                                                 const OnlineOptions& online,
                                                 const BeamParams& params) {
    std::map<Direction, SimTrace> traces;
    for (Direction direction : kAllDirections) {
        try {
            traces.emplace(direction, run_nn_mrac(net, normalizer, plant, refmodel,
                                                  direction, angle, duration, online,
                                                  params));
        } catch (const LoopDivergence& err) {
            throw LoopDivergence(to_string(direction) + ": " + err.what(),
                                 err.partial_trace);
        }
    }
    return traces;
}

}  // namespace wristsim
