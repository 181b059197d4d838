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

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "wristsim/beam.hpp"
#include "wristsim/errors.hpp"
#include "wristsim/lti.hpp"
#include "wristsim/network.hpp"

namespace wristsim {

/// The four anatomical wrist motions, each driven by its own tendon pair.
enum class Direction { kRadialDeviation, kUlnarDeviation, kFlexion, kExtension };

constexpr std::array<Direction, 4> kAllDirections = {
    Direction::kRadialDeviation, Direction::kUlnarDeviation, Direction::kFlexion,
    Direction::kExtension};

Direction direction_from_string(const std::string& name);
std::string to_string(Direction direction);

/// Non-negative tensions for the four peripheral tendons. Only the pair
/// assigned to the commanded direction is ever nonzero:
/// radial {1,2}, ulnar {4,5}, extension {1,4}, flexion {2,5}.
struct TendonCommand {
    double tendon1 = 0.0;
    double tendon2 = 0.0;
    double tendon4 = 0.0;
    double tendon5 = 0.0;
    bool slack = false;  ///< the controller asked for a negative (pushing) force
};

/// Splits a controller force across the direction's tendon pair, half each.
/// Negative forces clamp to zero and set the slack flag.
TendonCommand allocate_tendons(Direction direction, double force);

/// Wrist plant: the beam's static deflection-per-force gain cascaded with a
/// second-order actuator lag, so the DC gain of the realized system equals
/// the beam gain.
struct PlantModel {
    double static_gain;  ///< [m/N]
    double zeta;
    double omega_n;      ///< [rad/s]
    LTISystem system;

    static PlantModel from_beam(const BeamParams& params, double zeta, double omega_n,
                                double dt);
};

/// Uniformly sampled closed-loop run: t[k] = k dt and e = y_plant - y_ref at
/// every sample.
struct SimTrace {
    double dt = 0.0;
    std::vector<double> t;
    std::vector<double> r;        ///< commanded deflection [m]
    std::vector<double> y_ref;    ///< reference-model output [m]
    std::vector<double> y_plant;  ///< plant output [m]
    std::vector<double> e;        ///< tracking error [m]
    std::vector<double> u_force;  ///< controller force [N]
    std::vector<TendonCommand> tendons;
    Direction direction = Direction::kUlnarDeviation;
    std::string config_digest;
    bool slack_warning = false;

    std::size_t size() const { return t.size(); }
};

class LoopDivergence : public DivergenceError {
public:
    LoopDivergence(const std::string& what, SimTrace partial)
        : DivergenceError(what), partial_trace(std::move(partial)) {}

    SimTrace partial_trace;
};

/// Step amplitude for a commanded bending angle: the tip height of an arc
/// with R = L / angle, y = R (1 - cos(angle)). Positive for every direction;
/// each direction runs in its own bending plane. Requires 0 < angle <= pi/2.
double reference_for(Direction direction, double angle, const BeamParams& params);

struct OnlineOptions {
    bool enabled = false;
    double eta = 1e-3;  ///< gradient-step rate on 1/2 e^2
};

/// Network-in-the-loop run against the reference model.
///
/// Per step: the reference model advances with the step command scaled by
/// the inverse of its DC gain; e = y_plant - y_ref; the network maps the
/// normalized error to a normalized force, denormalized to u; tendons are
/// allocated; the plant advances with u. With online adaptation enabled the
/// network takes one gradient step per sample on 1/2 e^2 (chained through
/// the plant's static gain and the output scaling).
///
/// The plant/reference systems are taken by value so a run never mutates
/// the caller's instances.
SimTrace run_nn_mrac(const Network& net, const Normalizer& normalizer, PlantModel plant,
                     LTISystem refmodel, Direction direction, double angle,
                     double duration, const OnlineOptions& online,
                     const BeamParams& params);

/// Same run with an explicit step amplitude in meters instead of a bending
/// angle (also the zero-amplitude case used in tests).
SimTrace run_nn_mrac_amplitude(const Network& net, const Normalizer& normalizer,
                               PlantModel plant, LTISystem refmodel, Direction direction,
                               double amplitude, double duration,
                               const OnlineOptions& online);

/// Runs all four directions with a shared configuration; the map iterates in
/// enum order regardless of execution order.
std::map<Direction, SimTrace> run_all_directions(const Network& net,
                                                 const Normalizer& normalizer,
                                                 const PlantModel& plant,
                                                 const LTISystem& refmodel, double angle,
                                                 double duration,
                                                 const OnlineOptions& online,
                                                 const BeamParams& params);

}  // namespace wristsim
