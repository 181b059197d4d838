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

#include "wristsim/training.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "wristsim/errors.hpp"

namespace wristsim {

namespace {

constexpr double kLambdaCeiling = 1e12;
constexpr double kLambdaFloor = 1e-20;

/// Residuals (target - prediction) and their parameter Jacobian over the
/// given sample indices. d r/d p = -d f/d p.
void residuals_and_jacobian(const Network& net, const TrainingSet& data,
                            const std::vector<int>& indices, Eigen::VectorXd& residuals,
                            Eigen::MatrixXd& jacobian) {
    const int n = static_cast<int>(indices.size());
    residuals.resize(n);
    jacobian.resize(n, net.parameter_count());
    Eigen::VectorXd x(1);
    for (int i = 0; i < n; ++i) {
        x(0) = data.inputs(indices[i]);
        residuals(i) = data.targets(indices[i]) - net.forward(x)(0);
        jacobian.row(i) = -net.jacobian(x).row(0);
    }
}

double sse_only(const Network& net, const TrainingSet& data, const std::vector<int>& indices) {
    double sum = 0.0;
    Eigen::VectorXd x(1);
    for (int idx : indices) {
        x(0) = data.inputs(idx);
        const double r = data.targets(idx) - net.forward(x)(0);
        sum += r * r;
    }
    return sum;
}

}  // namespace

TrainingSet build_training_set(const std::vector<DatasetRecord>& records,
                               double washout, int stride) {
    if (stride < 1) {
        throw std::invalid_argument("build_training_set: stride must be >= 1");
    }
    if (!(washout >= 0.0) || !std::isfinite(washout)) {
        throw std::invalid_argument("build_training_set: washout must be finite and >= 0");
    }
    std::vector<double> errors;
    std::vector<double> forces;
    for (std::size_t k = 0; k < records.size(); k += static_cast<std::size_t>(stride)) {
        if (records[k].t < washout) continue;
        errors.push_back(records[k].e);
        forces.push_back(records[k].u_force);
    }
    if (errors.empty()) {
        throw std::invalid_argument(
            "build_training_set: no samples left after washout/stride");
    }
    const auto [e_min, e_max] = std::minmax_element(errors.begin(), errors.end());
    const auto [u_min, u_max] = std::minmax_element(forces.begin(), forces.end());
    Normalizer normalizer{Range(*e_min, *e_max), Range(*u_min, *u_max)};

    const int n = static_cast<int>(errors.size());
    TrainingSet set{Eigen::VectorXd(n), Eigen::VectorXd(n), normalizer};
    for (int i = 0; i < n; ++i) {
        set.inputs(i) = normalizer.input.normalize(errors[i]);
        set.targets(i) = normalizer.output.normalize(forces[i]);
    }
    return set;
}

std::string to_string(StopReason reason) {
    switch (reason) {
        case StopReason::kMaxEpochs: return "max_epochs";
        case StopReason::kGradientTolerance: return "gradient_tolerance";
        case StopReason::kGoalSse: return "goal_sse";
    }
    return "unknown";
}

SplitIndices split_indices(int count, double val_fraction, std::uint64_t seed) {
    if (count <= 0) {
        throw std::invalid_argument("split_indices: empty sample set");
    }
    if (!(val_fraction >= 0.0) || val_fraction >= 0.5) {
        throw std::invalid_argument("split_indices: val_fraction must lie in [0, 0.5)");
    }
    std::vector<int> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    for (int i = count - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(order[i], order[j]);
    }
    const int n_val = static_cast<int>(std::lround(val_fraction * count));
    const int n_train = count - 2 * n_val;
    SplitIndices split;
    split.train.assign(order.begin(), order.begin() + n_train);
    split.val.assign(order.begin() + n_train, order.begin() + n_train + n_val);
    split.test.assign(order.begin() + n_train + n_val, order.end());
    return split;
}

Eigen::VectorXd lm_step(const Eigen::MatrixXd& jacobian, const Eigen::VectorXd& residuals,
                        double lambda) {
    Eigen::MatrixXd normal = jacobian.transpose() * jacobian;
    normal.diagonal().array() += lambda;
    // Gradient of 1/2 SSE is J^T r with r = target - prediction and
    // J = d r/d p; the descent step solves against -J^T r.
    return Eigen::LDLT<Eigen::MatrixXd>(normal).solve(-jacobian.transpose() * residuals);
}

TrainReport train_lm(Network& net, const TrainingSet& data, const TrainOptions& options) {
    if (data.inputs.size() == 0 || data.inputs.size() != data.targets.size()) {
        throw std::invalid_argument("train_lm: empty or inconsistent training set");
    }
    if (net.input_size() != 1 || net.output_size() != 1) {
        throw std::invalid_argument("train_lm: network must be 1-in/1-out");
    }
    if (options.max_epochs < 1) {
        throw std::invalid_argument("train_lm: max_epochs must be >= 1");
    }

    const SplitIndices split =
        split_indices(static_cast<int>(data.inputs.size()), options.val_fraction, options.seed);

    TrainReport report;
    report.train_count = static_cast<int>(split.train.size());
    report.val_count = static_cast<int>(split.val.size());
    report.test_count = static_cast<int>(split.test.size());

    Eigen::VectorXd residuals;
    Eigen::MatrixXd jacobian;
    residuals_and_jacobian(net, data, split.train, residuals, jacobian);
    double sse = residuals.squaredNorm();
    if (!std::isfinite(sse)) {
        throw DivergenceError("train_lm: non-finite initial loss");
    }
    report.history.push_back(sse);

    double lambda = options.lambda0;
    const bool goal_enabled = std::isfinite(options.goal_sse) && options.goal_sse > 0.0;
    Eigen::VectorXd gradient = jacobian.transpose() * residuals;
    report.stop_reason = StopReason::kMaxEpochs;

    int epoch = 0;
    while (epoch < options.max_epochs) {
        if (gradient.norm() <= options.grad_tol) {
            report.stop_reason = StopReason::kGradientTolerance;
            break;
        }
        if (goal_enabled && sse <= options.goal_sse) {
            report.stop_reason = StopReason::kGoalSse;
            break;
        }
        ++epoch;

        const Eigen::VectorXd backup = net.parameters();
        bool accepted = false;
        while (true) {
            const Eigen::VectorXd delta = lm_step(jacobian, residuals, lambda);
            if (delta.allFinite()) {
                net.set_parameters(backup + delta);
                const double candidate = sse_only(net, data, split.train);
                if (std::isfinite(candidate) && candidate < sse) {
                    sse = candidate;
                    lambda = std::max(lambda * options.lambda_down, kLambdaFloor);
                    accepted = true;
                    break;
                }
                net.set_parameters(backup);
            }
            lambda *= options.lambda_up;
            if (lambda > kLambdaCeiling) break;
        }
        if (!accepted) {
            throw TrainingError(
                "train_lm: no acceptable step before the damping ceiling (lambda = " +
                std::to_string(lambda) + ")");
        }
        report.history.push_back(sse);
        residuals_and_jacobian(net, data, split.train, residuals, jacobian);
        gradient = jacobian.transpose() * residuals;
    }
    if (epoch == options.max_epochs) {
        // Stopping checks run before each epoch; re-evaluate them once more
        // so a run that reaches its goal on the last step reports it.
        if (gradient.norm() <= options.grad_tol) {
            report.stop_reason = StopReason::kGradientTolerance;
        } else if (goal_enabled && sse <= options.goal_sse) {
            report.stop_reason = StopReason::kGoalSse;
        }
    }

    report.epochs = epoch;
    report.train_sse = sse;
    report.val_sse = sse_only(net, data, split.val);
    report.final_lambda = lambda;
    report.gradient_norm = gradient.norm();
    return report;
}

RegressionStats evaluate_regression(const Network& net, const TrainingSet& data) {
    const int n = static_cast<int>(data.inputs.size());
    if (n == 0) {
        throw std::invalid_argument("evaluate_regression: empty data");
    }
    Eigen::VectorXd predictions(n);
    Eigen::VectorXd x(1);
    for (int i = 0; i < n; ++i) {
        x(0) = data.inputs(i);
        predictions(i) = net.forward(x)(0);
    }
    const double pred_mean = predictions.mean();
    const double target_mean = data.targets.mean();
    const Eigen::VectorXd dp = predictions.array() - pred_mean;
    const Eigen::VectorXd dt = data.targets.array() - target_mean;
    const double var_t = dt.squaredNorm();
    const double var_p = dp.squaredNorm();
    if (var_t == 0.0) {
        throw std::invalid_argument(
            "evaluate_regression: zero-variance targets, correlation undefined");
    }
    RegressionStats stats;
    // A constant predictor carries no linear association; report r = 0.
    stats.r_value = var_p == 0.0 ? 0.0 : dp.dot(dt) / std::sqrt(var_p * var_t);
    stats.mse = (predictions - data.targets).squaredNorm() / n;
    return stats;
}

}  // namespace wristsim
