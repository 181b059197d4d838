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

namespace wristsim {

enum class Activation { kLinear, kSigmoid };

Activation activation_from_string(const std::string& name);
std::string to_string(Activation activation);

/// Affine min-max map of a scalar onto [0, 1]. Values outside the range
/// extrapolate linearly; the inverse is the exact algebraic inverse.
struct Range {
    double min;
    double max;

    Range(double min, double max);

    double normalize(double raw) const { return (raw - min) / (max - min); }
    double denormalize(double normalized) const { return min + normalized * (max - min); }
};

/// Input (error) and output (force) scaling used around the network.
struct Normalizer {
    Range input;
    Range output;
};

/// Fully connected feedforward network with sigmoid hidden layers and a
/// configurable (linear or sigmoid) output layer.
///
/// Parameters flatten layer by layer, each layer's weight matrix in
/// row-major order followed by its bias vector; the Jacobian columns and the
/// weights file use the same ordering. A network is immutable during
/// inference and safe to share across threads; training works on a copy.
class Network {
public:
    Network(std::vector<int> layer_sizes, Activation output_activation = Activation::kLinear);

    /// Random initialization, uniform in [-0.5, 0.5], reproducible per seed.
    static Network seeded(std::vector<int> layer_sizes, std::uint64_t seed,
                          Activation output_activation = Activation::kLinear);

    const std::vector<int>& layer_sizes() const { return sizes_; }
    Activation output_activation() const { return output_activation_; }
    int input_size() const { return sizes_.front(); }
    int output_size() const { return sizes_.back(); }
    int parameter_count() const { return parameter_count_; }

    Eigen::VectorXd forward(const Eigen::VectorXd& input) const;

    /// Scalar convenience for 1-in/1-out networks.
    double forward1(double input) const;

    /// d(output)/d(parameters), one row per output component, one column per
    /// flattened parameter, by reverse-mode accumulation.
    Eigen::MatrixXd jacobian(const Eigen::VectorXd& input) const;

    Eigen::VectorXd parameters() const;
    void set_parameters(const Eigen::VectorXd& flat);

    const Eigen::MatrixXd& weights(int layer) const { return weights_[layer]; }
    const Eigen::VectorXd& biases(int layer) const { return biases_[layer]; }
    void set_weight(int layer, int row, int col, double value);
    void set_bias(int layer, int row, double value);

    /// Text format: optional '#' comment lines, one line of layer sizes,
    /// then one parameter per line in flattening order at full round-trip
    /// precision. save -> load -> save is byte-identical.
    void save(const std::string& path, const std::string& config_digest = "") const;
    static Network load(const std::string& path,
                        Activation output_activation = Activation::kLinear);

private:
    std::vector<int> sizes_;
    Activation output_activation_;
    std::vector<Eigen::MatrixXd> weights_;
    std::vector<Eigen::VectorXd> biases_;
    int parameter_count_ = 0;
};

double sigmoid(double z);

/// Saves the min-max scaling next to a weights file so inference can map raw
/// errors to forces without the training dataset.
void save_normalizer(const Normalizer& normalizer, const std::string& path,
                     const std::string& config_digest = "");
Normalizer load_normalizer(const std::string& path);

}  // namespace wristsim
