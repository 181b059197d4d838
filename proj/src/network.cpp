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

#include "wristsim/network.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wristsim/errors.hpp"
#include "wristsim/textio.hpp"

namespace wristsim {

Activation activation_from_string(const std::string& name) {
    if (name == "linear") return Activation::kLinear;
    if (name == "sigmoid") return Activation::kSigmoid;
    throw std::invalid_argument("unknown activation '" + name +
                                "' (expected 'linear' or 'sigmoid')");
}

std::string to_string(Activation activation) {
    return activation == Activation::kLinear ? "linear" : "sigmoid";
}

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

Range::Range(double min, double max) : min(min), max(max) {
    if (!std::isfinite(min) || !std::isfinite(max)) {
        throw std::invalid_argument("normalization range must be finite");
    }
    if (!(max > min)) {
        throw std::invalid_argument("degenerate normalization range (max <= min)");
    }
}

Network::Network(std::vector<int> layer_sizes, Activation output_activation)
    : sizes_(std::move(layer_sizes)), output_activation_(output_activation) {
    if (sizes_.size() < 2) {
        throw std::invalid_argument("network needs at least input and output layers");
    }
    for (int s : sizes_) {
        if (s <= 0) throw std::invalid_argument("layer sizes must be positive");
    }
    weights_.reserve(sizes_.size() - 1);
    biases_.reserve(sizes_.size() - 1);
    for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
        weights_.emplace_back(Eigen::MatrixXd::Zero(sizes_[l + 1], sizes_[l]));
        biases_.emplace_back(Eigen::VectorXd::Zero(sizes_[l + 1]));
        parameter_count_ += sizes_[l + 1] * (sizes_[l] + 1);
    }
}

Network Network::seeded(std::vector<int> layer_sizes, std::uint64_t seed,
                        Activation output_activation) {
    Network net(std::move(layer_sizes), output_activation);
    std::mt19937_64 rng(seed);
    // Bit-stable uniform draw in [-0.5, 0.5); avoids the
    // implementation-defined std::uniform_real_distribution.
    auto draw = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
    };
    Eigen::VectorXd flat(net.parameter_count());
    for (int i = 0; i < flat.size(); ++i) flat(i) = draw();
    net.set_parameters(flat);
    return net;
}

Eigen::VectorXd Network::forward(const Eigen::VectorXd& input) const {
    if (input.size() != sizes_.front()) {
        throw std::invalid_argument("forward: input has size " +
                                    std::to_string(input.size()) + ", expected " +
                                    std::to_string(sizes_.front()));
    }
    if (!input.allFinite()) {
        throw std::invalid_argument("forward: non-finite input");
    }
    Eigen::VectorXd a = input;
    const std::size_t last = weights_.size() - 1;
    for (std::size_t l = 0; l < weights_.size(); ++l) {
        Eigen::VectorXd z = weights_[l] * a + biases_[l];
        if (l < last || output_activation_ == Activation::kSigmoid) {
            a = z.unaryExpr([](double v) { return sigmoid(v); });
        } else {
            a = std::move(z);
        }
    }
    return a;
}

double Network::forward1(double input) const {
    if (sizes_.front() != 1 || sizes_.back() != 1) {
        throw std::invalid_argument("forward1 requires a 1-in/1-out network");
    }
    Eigen::VectorXd x(1);
    x(0) = input;
    return forward(x)(0);
}

Eigen::MatrixXd Network::jacobian(const Eigen::VectorXd& input) const {
    if (input.size() != sizes_.front()) {
        throw std::invalid_argument("jacobian: input size mismatch");
    }
    const std::size_t layers = weights_.size();
    std::vector<Eigen::VectorXd> activations(layers + 1);
    std::vector<Eigen::VectorXd> pre(layers);
    activations[0] = input;
    for (std::size_t l = 0; l < layers; ++l) {
        pre[l] = weights_[l] * activations[l] + biases_[l];
        if (l + 1 < layers || output_activation_ == Activation::kSigmoid) {
            activations[l + 1] = pre[l].unaryExpr([](double v) { return sigmoid(v); });
        } else {
            activations[l + 1] = pre[l];
        }
    }

    const int n_out = sizes_.back();
    Eigen::MatrixXd jac(n_out, parameter_count_);
    for (int out = 0; out < n_out; ++out) {
        // Seed d(out)/d(z_last) for this output component.
        Eigen::VectorXd delta = Eigen::VectorXd::Zero(n_out);
        if (output_activation_ == Activation::kSigmoid) {
            const double s = activations[layers](out);
            delta(out) = s * (1.0 - s);
        } else {
            delta(out) = 1.0;
        }
        int offset = parameter_count_;
        for (std::size_t l = layers; l-- > 0;) {
            const int rows = static_cast<int>(weights_[l].rows());
            const int cols = static_cast<int>(weights_[l].cols());
            offset -= rows;
            jac.block(out, offset, 1, rows) = delta.transpose();
            offset -= rows * cols;
            for (int i = 0; i < rows; ++i) {
                jac.block(out, offset + i * cols, 1, cols) =
                    delta(i) * activations[l].transpose();
            }
            if (l > 0) {
                Eigen::VectorXd back = weights_[l].transpose() * delta;
                const Eigen::VectorXd& s = activations[l];
                delta = back.cwiseProduct(s.cwiseProduct(
                    (Eigen::VectorXd::Ones(s.size()) - s)));
            }
        }
    }
    return jac;
}

Eigen::VectorXd Network::parameters() const {
    Eigen::VectorXd flat(parameter_count_);
    int offset = 0;
    for (std::size_t l = 0; l < weights_.size(); ++l) {
        const auto& w = weights_[l];
        for (int i = 0; i < w.rows(); ++i) {
            for (int j = 0; j < w.cols(); ++j) flat(offset++) = w(i, j);
        }
        for (int i = 0; i < biases_[l].size(); ++i) flat(offset++) = biases_[l](i);
    }
    return flat;
}

void Network::set_parameters(const Eigen::VectorXd& flat) {
    if (flat.size() != parameter_count_) {
        throw std::invalid_argument("set_parameters: expected " +
                                    std::to_string(parameter_count_) + " values, got " +
                                    std::to_string(flat.size()));
    }
    if (!flat.allFinite()) {
        throw std::invalid_argument("set_parameters: parameters must be finite");
    }
    int offset = 0;
    for (std::size_t l = 0; l < weights_.size(); ++l) {
        auto& w = weights_[l];
        for (int i = 0; i < w.rows(); ++i) {
            for (int j = 0; j < w.cols(); ++j) w(i, j) = flat(offset++);
        }
        for (int i = 0; i < biases_[l].size(); ++i) biases_[l](i) = flat(offset++);
    }
}

void Network::set_weight(int layer, int row, int col, double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("weight must be finite");
    weights_.at(layer)(row, col) = value;
}

void Network::set_bias(int layer, int row, double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("bias must be finite");
    biases_.at(layer)(row) = value;
}

void Network::save(const std::string& path, const std::string& config_digest) const {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("Network::save: cannot open '" + path + "'");
    }
    if (!config_digest.empty()) {
        out << "# config_digest=" << config_digest << "\n";
    }
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        out << (i ? " " : "") << sizes_[i];
    }
    out << "\n";
    const Eigen::VectorXd flat = parameters();
    for (int i = 0; i < flat.size(); ++i) {
        out << format_double(flat(i)) << "\n";
    }
    if (!out.good()) {
        throw std::runtime_error("Network::save: write to '" + path + "' failed");
    }
}

Network Network::load(const std::string& path, Activation output_activation) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("Network::load: cannot open '" + path + "'");
    }
    std::string line;
    int lineno = 0;
    std::vector<int> sizes;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::istringstream header(line);
        int v;
        while (header >> v) sizes.push_back(v);
        if (!header.eof()) {
            throw ParseError(path, lineno, "invalid layer-size header '" + trim(line) + "'");
        }
        break;
    }
    if (sizes.size() < 2) {
        throw ParseError(path, lineno, "layer-size header needs at least two sizes");
    }
    Network net(sizes, output_activation);
    Eigen::VectorXd flat(net.parameter_count());
    int have = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        if (have >= net.parameter_count()) {
            throw ParseError(path, lineno,
                             "extra parameter line (expected exactly " +
                                 std::to_string(net.parameter_count()) + ")");
        }
        double v = 0.0;
        if (!parse_double(trim(line), v) || !std::isfinite(v)) {
            throw ParseError(path, lineno, "invalid parameter value '" + trim(line) + "'");
        }
        flat(have++) = v;
    }
    if (have != net.parameter_count()) {
        throw ParseError(path, lineno,
                         "truncated weights file: expected " +
                             std::to_string(net.parameter_count()) + " parameters, got " +
                             std::to_string(have));
    }
    net.set_parameters(flat);
    return net;
}

void save_normalizer(const Normalizer& normalizer, const std::string& path,
                     const std::string& config_digest) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("save_normalizer: cannot open '" + path + "'");
    }
    if (!config_digest.empty()) {
        out << "# config_digest=" << config_digest << "\n";
    }
    out << "input_min " << format_double(normalizer.input.min) << "\n"
        << "input_max " << format_double(normalizer.input.max) << "\n"
        << "output_min " << format_double(normalizer.output.min) << "\n"
        << "output_max " << format_double(normalizer.output.max) << "\n";
    if (!out.good()) {
        throw std::runtime_error("save_normalizer: write to '" + path + "' failed");
    }
}

Normalizer load_normalizer(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("load_normalizer: cannot open '" + path + "'");
    }
    const char* keys[4] = {"input_min", "input_max", "output_min", "output_max"};
    double values[4];
    std::string line;
    int lineno = 0;
    int have = 0;
    while (std::getline(in, line) && have < 4) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::istringstream row(line);
        std::string key, value;
        row >> key >> value;
        if (key != keys[have] || !parse_double(value, values[have])) {
            throw ParseError(path, lineno,
                             std::string("expected '") + keys[have] + " <value>'");
        }
        ++have;
    }
    if (have != 4) {
        throw ParseError(path, lineno, "truncated normalizer file");
    }
    return Normalizer{Range(values[0], values[1]), Range(values[2], values[3])};
}

}  // namespace wristsim
