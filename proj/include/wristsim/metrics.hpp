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

#include "wristsim/closed_loop.hpp"

namespace wristsim {

struct MetricsReport {
    double rmse = 0.0;                ///< [m]
    double settling_time = 0.0;       ///< [s], meaningful only when settled
    bool settled = false;
    double steady_state_error = 0.0;  ///< [m]
    double band = 0.02;               ///< settling band as a fraction of |r_final|
    double window = 1.0;              ///< terminal averaging window [s]
};

/// Root mean square of y_plant - y_ref over all samples.
double rmse(const SimTrace& trace);

struct SettlingResult {
    double time = 0.0;
    bool settled = false;
};

/// Earliest time after which |y_plant - r_final| <= band |r_final| holds for
/// every subsequent sample. Throws if the final reference value is zero.
SettlingResult settling_time(const SimTrace& trace, double band = 0.02);

/// Magnitude of the mean of y_plant - r_final over the final window seconds.
double steady_state_error(const SimTrace& trace, double window = 1.0);

MetricsReport compute_metrics(const SimTrace& trace, double band = 0.02,
                              double window = 1.0);

}  // namespace wristsim
