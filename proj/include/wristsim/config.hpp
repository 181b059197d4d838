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

#include <cstdint>
#include <string>
#include <vector>

#include "wristsim/beam.hpp"
#include "wristsim/closed_loop.hpp"
#include "wristsim/network.hpp"

namespace wristsim {

/// Sectioned key = value configuration with defaults for the full pipeline.
/// Unknown sections or keys are rejected by name. The resolved config
/// serializes back to file form; its FNV-1a digest stamps every output file.
struct Config {
    struct Beam {
        double e = 1e6;      ///< Young's modulus [Pa]
        double i = 1e-8;     ///< area moment [m^4]
        double l = 0.1;      ///< length [m]
        double k = 0.9;      ///< shear correction factor
        double a = 1e-4;     ///< cross-section area [m^2]
        double g = 4e5;      ///< shear modulus [Pa]
        double r = 0.05;     ///< curvature radius [m]
        ProfileVariant profile_variant = ProfileVariant::kCorrected;
    } beam;

    struct Reference {
        std::vector<double> num = {-4.0};
        std::vector<double> den = {1.0, 3.0, 5.0};
        double dt = 1e-3;  ///< [s]
    } reference;

    struct Plant {
        double zeta = 0.7;
        double omega_n = 3.0;  ///< [rad/s]
    } plant;

    struct Mrac {
        double gamma = 30000.0;
        double duration = 90.0;     ///< [s]
        double blowup_limit = 1e6;
        double feedback_gain = 100.0;  ///< fixed inner-loop gain [N/m]
        double dither_amp = 0.5;       ///< excitation force amplitude [N]
        double dither_period = 2.0;    ///< [s]
    } mrac;

    struct Nn {
        std::vector<int> layers = {1, 5, 5, 7, 1};
        std::uint64_t seed = 42;
        int max_epochs = 1000;
        double lambda0 = 1e-3;
        double lambda_up = 10.0;
        double lambda_down = 0.1;
        double grad_tol = 1e-14;
        double goal_sse = 0.0;  ///< <= 0 disables the SSE goal
        Activation output_activation = Activation::kLinear;
    } nn;

    struct Train {
        double val_fraction = 0.15;
        int stride = 10;
        double washout = 30.0;  ///< seconds of adaptation transient to drop
    } train;

    struct Loop {
        /// Empty string means all four directions.
        std::string direction = "all";
        double angle_deg = 30.0;
        double duration = 10.0;  ///< [s]
        bool online = false;
        double eta = 1e-3;
    } loop;

    struct Metrics {
        double band = 0.02;
        double window = 1.0;  ///< [s]
    } metrics;
};

/// Parses a config file; keys not present keep their defaults.
Config parse_config_file(const std::string& path);

/// Parses config text (same syntax as the file form).
Config parse_config_text(const std::string& text, const std::string& origin = "<config>");

/// Canonical file-form serialization of the resolved config.
std::string serialize_config(const Config& config);

/// 16-hex-digit digest of the canonical serialization.
std::string config_digest(const Config& config);

// Builders for the configured components.
BeamParams make_beam_params(const Config& config);
TransferFunction make_reference_tf(const Config& config);
LTISystem make_reference_model(const Config& config);
PlantModel make_plant(const Config& config);

}  // namespace wristsim
