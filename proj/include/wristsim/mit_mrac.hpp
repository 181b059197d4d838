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

#include <functional>
#include <string>
#include <vector>

#include "wristsim/errors.hpp"
#include "wristsim/lti.hpp"

namespace wristsim {

/// Adjustable feedforward gain adapted by the MIT gradient rule
/// theta' = -gamma e y_m.
struct MitRuleState {
    double theta = 0.0;  ///< adjustable gain
    double gamma = 0.0;  ///< adaptation gain [1/s], >= 0 (0 disables adaptation)

    MitRuleState(double gamma, double theta0 = 0.0);
};

/// One explicit-Euler step of the MIT rule using the current tracking error
/// and reference-model output: theta += dt (-gamma e y_m).
MitRuleState mit_update(const MitRuleState& state, double error,
                        double model_output, double dt);

/// One sample of the adaptive-control run used as training data.
struct DatasetRecord {
    double t;        ///< [s]
    double r;        ///< commanded deflection [m]
    double y_plant;  ///< plant output [m]
    double y_model;  ///< reference-model output [m]
    double e;        ///< y_plant - y_model [m]
    double u_force;  ///< controller output [N]
    double theta;    ///< adaptive gain at this sample
};

struct MracOptions {
    double gamma = 30000.0;       ///< MIT adaptation gain
    double duration = 90.0;       ///< [s]
    double blowup_limit = 1e6;    ///< divergence threshold on |theta| and |e|
    double feedback_gain = 0.0;   ///< fixed inner-loop gain on e [N/m]
    double dither_amp = 0.0;      ///< plant-input excitation amplitude [N]
    double dither_period = 2.0;   ///< square-dither period [s]
    double theta0 = 0.0;          ///< initial adaptive gain
};

/// Thrown when the adaptive loop exceeds the blow-up limit or produces a
/// non-finite state; carries the trace recorded up to that point.
class MracDivergence : public DivergenceError {
public:
    MracDivergence(const std::string& what, std::vector<DatasetRecord> partial)
        : DivergenceError(what), partial_records(std::move(partial)) {}

    std::vector<DatasetRecord> partial_records;
};

/// Closed-loop adaptive run producing one record per sample (duration/dt + 1
/// records including t = 0).
///
/// Per step: u = theta r - k_fb e is applied to the plant (plus the square
/// dither when enabled), the reference model is driven by r scaled with the
/// inverse of its DC gain so its output converges to +r, and theta is
/// updated with the MIT rule. Both systems must share the sample period and
/// are reset at the start of the run.
std::vector<DatasetRecord> run_mrac(LTISystem& plant, LTISystem& refmodel,
                                    const std::function<double(double)>& reference,
                                    const MracOptions& options);

/// Writes the records as CSV with an optional leading config-digest comment.
/// Header: t,r,y_plant,y_model,e,u_force_N,theta
void export_dataset(const std::vector<DatasetRecord>& records,
                    const std::string& path, const std::string& config_digest = "");

/// Reads a dataset written by export_dataset. Throws ParseError on schema or
/// number format violations.
std::vector<DatasetRecord> import_dataset(const std::string& path);

}  // namespace wristsim
