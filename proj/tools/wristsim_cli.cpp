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

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "wristsim/commands.hpp"
#include "wristsim/errors.hpp"

namespace {

// Exit codes: 0 success, 1 contract or metric failure, 2 usage/parse errors.
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adaptive neuro-controller pipeline for a tendon-driven soft wrist"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_given = false;
    app.add_option("--config", config_path, "Config file (defaults apply when omitted)");
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();
    app.add_option("--seed", seed, "Override the [nn] seed")
        ->each([&seed_given](const std::string&) { seed_given = true; });

    auto* dataset = app.add_subcommand("dataset", "Generate the adaptive-control dataset");
    std::string dataset_file = "dataset.csv";
    dataset->add_option("--out-file", dataset_file, "Dataset file name")
        ->capture_default_str();

    auto* train = app.add_subcommand("train", "Train the controller network");
    std::string data_path;
    std::string weights_out;
    std::string report_out;
    train->add_option("--data", data_path, "Dataset CSV (default <out>/dataset.csv)");
    train->add_option("--weights-out", weights_out, "Weights file (default <out>/weights.txt)");
    train->add_option("--report", report_out, "Report file (default <out>/train_report.txt)");

    auto* simulate = app.add_subcommand("simulate", "Run the closed-loop simulation");
    std::string weights_path;
    std::string direction_override;
    simulate->add_option("--weights", weights_path, "Weights file (default <out>/weights.txt)");
    simulate->add_option("--direction", direction_override,
                         "Simulate a single direction (radial/ulnar/flexion/extension)");

    auto* evaluate = app.add_subcommand("evaluate", "Compute metrics for trace CSVs");
    std::vector<std::string> trace_paths;
    evaluate->add_option("traces", trace_paths, "Trace CSV files")->required();

    auto* gradcheck = app.add_subcommand("gradcheck", "Check the network Jacobian");
    double tolerance = 1e-5;
    int draws = 100;
    std::string gradcheck_weights;
    gradcheck->add_option("--tol", tolerance, "Relative tolerance")->capture_default_str();
    gradcheck->add_option("--draws", draws, "Random draws")->capture_default_str();
    gradcheck->add_option("--weights", gradcheck_weights, "Check a saved weights file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        wristsim::Config config = config_path.empty()
                                      ? wristsim::Config{}
                                      : wristsim::parse_config_file(config_path);
        if (seed_given) config.nn.seed = seed;
        const auto in_out = [&out_dir](const std::string& name) {
            return (std::filesystem::path(out_dir) / name).string();
        };

        if (*dataset) {
            std::filesystem::create_directories(out_dir);
            wristsim::cmd_dataset(config, in_out(dataset_file));
            return kOk;
        }
        if (*train) {
            std::filesystem::create_directories(out_dir);
            if (data_path.empty()) data_path = in_out("dataset.csv");
            if (weights_out.empty()) weights_out = in_out("weights.txt");
            if (report_out.empty()) report_out = in_out("train_report.txt");
            wristsim::cmd_train(config, data_path, weights_out, report_out);
            return kOk;
        }
        if (*simulate) {
            if (weights_path.empty()) weights_path = in_out("weights.txt");
            if (!direction_override.empty()) config.loop.direction = direction_override;
            wristsim::cmd_simulate(config, weights_path, out_dir);
            return kOk;
        }
        if (*evaluate) {
            return wristsim::cmd_evaluate(trace_paths, config.metrics.band,
                                          config.metrics.window, std::cout)
                       ? kOk
                       : kFailure;
        }
        if (*gradcheck) {
            return wristsim::cmd_gradcheck(config, tolerance, draws, gradcheck_weights,
                                           std::cout)
                       ? kOk
                       : kFailure;
        }
    } catch (const wristsim::ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
