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

#include <map>
#include <string>

#include "wristsim/closed_loop.hpp"
#include "wristsim/training.hpp"

namespace wristsim {

/// Trace CSV with header
/// t,r,y_ref,y_plant,e,u_force_N,tendon1,tendon2,tendon4,tendon5
/// preceded by '# config_digest=' and '# direction=' comment lines.
void write_trace_csv(const SimTrace& trace, const std::string& path);
SimTrace read_trace_csv(const std::string& path);

/// Downsampled plot data for all traces of a run, one file:
/// direction,t,y_ref,y_plant,e
void write_plot_csv(const std::map<Direction, SimTrace>& traces, const std::string& path,
                    const std::string& config_digest, std::size_t target_points = 500);

/// Key: value training summary (epochs, stop reason, gradient, losses,
/// regression r).
void write_train_report(const TrainReport& report, const RegressionStats& regression,
                        const std::string& path, const std::string& config_digest);

}  // namespace wristsim
