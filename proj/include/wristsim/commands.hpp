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

#include <iosfwd>
#include <string>
#include <vector>

#include "wristsim/config.hpp"

namespace wristsim {

/// Generates the adaptive-control dataset and writes it as CSV.
void cmd_dataset(const Config& config, const std::string& out_path);

/// Trains the network on a dataset CSV; writes the weights file, its
/// normalizer sidecar (<weights_out>.norm) and a training report.
void cmd_train(const Config& config, const std::string& dataset_path,
               const std::string& weights_out, const std::string& report_out);

/// Simulates the configured direction(s) with a trained network; writes one
/// trace CSV per direction plus a downsampled plot-data file into out_dir.
/// Returns the written trace paths.
std::vector<std::string> cmd_simulate(const Config& config, const std::string& weights_path,
                                      const std::string& out_dir);

/// Computes metrics for each trace and prints one CSV row per trace plus an
/// average row. Returns true iff every trace settled.
bool cmd_evaluate(const std::vector<std::string>& trace_paths, double band, double window,
                  std::ostream& out);

/// Compares the reverse-mode Jacobian against central finite differences on
/// randomized networks (or a loaded weights file) and prints a summary.
/// Returns true on success.
bool cmd_gradcheck(const Config& config, double tolerance, int draws,
                   const std::string& weights_path, std::ostream& out);

}  // namespace wristsim
