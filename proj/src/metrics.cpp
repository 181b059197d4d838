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

#include "wristsim/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace wristsim {

double rmse(const SimTrace& trace) {
    if (trace.size() == 0) {
        throw std::invalid_argument("rmse: empty trace");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < trace.size(); ++k) {
        const double d = trace.y_plant[k] - trace.y_ref[k];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(trace.size()));
}

SettlingResult settling_time(const SimTrace& trace, double band) {
    if (trace.size() == 0) {
        throw std::invalid_argument("settling_time: empty trace");
    }
    if (!(band > 0.0)) {
        throw std::invalid_argument("settling_time: band must be > 0");
    }
    const double r_final = trace.r.back();
    if (r_final == 0.0) {
        throw std::invalid_argument(
            "settling_time: zero final reference, band undefined");
    }
    const double tol = band * std::abs(r_final);
    // Walk backward to the last out-of-band sample; settling starts just after.
    std::size_t first_inside = 0;
    for (std::size_t k = trace.size(); k-- > 0;) {
        if (std::abs(trace.y_plant[k] - r_final) > tol) {
            first_inside = k + 1;
            break;
        }
    }
    if (first_inside >= trace.size()) {
        return SettlingResult{0.0, false};
    }
    return SettlingResult{trace.t[first_inside], true};
}

double steady_state_error(const SimTrace& trace, double window) {
    if (trace.size() < 2) {
        throw std::invalid_argument("steady_state_error: trace too short");
    }
    const double duration = trace.t.back();
    if (!(window > 0.0) || window >= duration) {
        throw std::invalid_argument(
            "steady_state_error: window must lie in (0, duration)");
    }
    const double r_final = trace.r.back();
    const double t_start = duration - window;
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < trace.size(); ++k) {
        if (trace.t[k] >= t_start) {
            sum += trace.y_plant[k] - r_final;
            ++count;
        }
    }
    return std::abs(sum / static_cast<double>(count));
}

MetricsReport compute_metrics(const SimTrace& trace, double band, double window) {
    MetricsReport report;
    report.band = band;
    report.window = window;
    report.rmse = rmse(trace);
    const SettlingResult settling = settling_time(trace, band);
    report.settled = settling.settled;
    report.settling_time = settling.time;
    report.steady_state_error = steady_state_error(trace, window);
    return report;
}

}  // namespace wristsim
