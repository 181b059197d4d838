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

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "wristsim/mit_mrac.hpp"
#include "wristsim/network.hpp"

namespace wristsim {

/// Normalized error -> force samples plus the scaling that produced them.
struct TrainingSet {
    Eigen::VectorXd inputs;   ///< normalized to [0, 1]
    Eigen::VectorXd targets;  ///< normalized to [0, 1]
    Normalizer normalizer;
};

/// Builds the training set from an adaptive-control trace: drops the first
/// `washout` seconds (the adaptation transient), keeps every `stride`-th
/// sample, then min-max normalizes errors and forces over the kept samples.
TrainingSet build_training_set(const std::vector<DatasetRecord>& records,
                               double washout, int stride);

struct TrainOptions {
    int max_epochs = 1000;
    double lambda0 = 1e-3;
    double lambda_up = 10.0;
    double lambda_down = 0.1;
    double grad_tol = 1e-14;
    /// Stop once the training SSE falls to this value; a non-positive or
    /// non-finite goal disables the criterion.
    double goal_sse = 0.0;
    double val_fraction = 0.15;
    std::uint64_t seed = 42;
};

enum class StopReason { kMaxEpochs, kGradientTolerance, kGoalSse };

std::string to_string(StopReason reason);

struct TrainReport {
    int epochs = 0;                ///< outer iterations run
    double train_sse = 0.0;        ///< final SSE over the training split
    double val_sse = 0.0;          ///< final SSE over the validation split
    double final_lambda = 0.0;
    double gradient_norm = 0.0;    ///< |J^T r|_2 at the final parameters
    std::vector<double> history;   ///< initial SSE, then one entry per accepted step
    StopReason stop_reason = StopReason::kMaxEpochs;
    int train_count = 0;
    int val_count = 0;
    int test_count = 0;
};

/// Deterministic shuffled split: 70/15/15 for the default val_fraction (the
/// validation and held-out test slices are both `val_fraction`).
struct SplitIndices {
    std::vector<int> train;
    std::vector<int> val;
    std::vector<int> test;
};

SplitIndices split_indices(int count, double val_fraction, std::uint64_t seed);

/// Damped Gauss-Newton (Levenberg-Marquardt) on the sum of squared
/// residuals of the training split: each epoch solves
/// (J^T J + lambda I) delta = J^T r and accepts the step only if the SSE
/// strictly decreases, scaling lambda down on acceptance and up on
/// rejection. Stops on the epoch limit, the gradient-norm tolerance, or the
/// SSE goal. Throws TrainingError if lambda hits its ceiling without an
/// acceptable step and DivergenceError on a non-finite initial loss.
TrainReport train_lm(Network& net, const TrainingSet& data, const TrainOptions& options);

/// One damped step: solves (J^T J + lambda I) delta = J^T r.
Eigen::VectorXd lm_step(const Eigen::MatrixXd& jacobian, const Eigen::VectorXd& residuals,
                        double lambda);

struct RegressionStats {
    double r_value;  ///< Pearson correlation between predictions and targets
    double mse;
};

/// Fit quality over all samples of the set. Throws on zero-variance targets
/// or predictions (correlation undefined).
RegressionStats evaluate_regression(const Network& net, const TrainingSet& data);

}  // namespace wristsim
