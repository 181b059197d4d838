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

#include "wristsim/lti.hpp"

#include <cmath>
#include <stdexcept>

#include "wristsim/errors.hpp"

namespace wristsim {

TransferFunction::TransferFunction(std::vector<double> numerator,
                                   std::vector<double> denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
    if (num.empty() || den.empty()) {
        throw std::invalid_argument("transfer function coefficients must be non-empty");
    }
    for (double c : num) {
        if (!std::isfinite(c)) throw std::invalid_argument("non-finite numerator coefficient");
    }
    for (double c : den) {
        if (!std::isfinite(c)) throw std::invalid_argument("non-finite denominator coefficient");
    }
    if (den.front() == 0.0) {
        throw std::invalid_argument("leading denominator coefficient must be nonzero");
    }
    if (num.size() > den.size()) {
        throw std::invalid_argument("improper transfer function (deg num > deg den)");
    }
}

double TransferFunction::dc_gain() const {
    if (den.back() == 0.0) {
        throw std::invalid_argument("DC gain undefined: denominator constant term is zero");
    }
    return num.back() / den.back();
}

LTISystem::LTISystem(const TransferFunction& tf, double dt) : dt_(dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("sample period must be finite and > 0");
    }
    const int n = static_cast<int>(tf.den.size()) - 1;

    // Normalize to a monic denominator, pad the numerator to n+1 terms.
    const double lead = tf.den.front();
    Eigen::VectorXd a(n);  // a(i) = coefficient of s^i
    for (int i = 0; i < n; ++i) a(i) = tf.den[tf.den.size() - 1 - i] / lead;
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 1);
    for (std::size_t j = 0; j < tf.num.size(); ++j) {
        b(static_cast<int>(tf.num.size() - 1 - j)) = tf.num[j] / lead;
    }

    d_ = b(n);
    a_ = Eigen::MatrixXd::Zero(n, n);
    b_ = Eigen::VectorXd::Zero(n);
    c_ = Eigen::VectorXd::Zero(n);
    for (int i = 0; i + 1 < n; ++i) a_(i, i + 1) = 1.0;
    for (int i = 0; i < n; ++i) {
        a_(n - 1, i) = -a(i);
        c_(i) = b(i) - a(i) * d_;
    }
    if (n > 0) b_(n - 1) = 1.0;
    x_ = Eigen::VectorXd::Zero(n);
}

double LTISystem::step(double u) {
    if (!std::isfinite(u)) {
        throw DivergenceError("LTISystem::step: non-finite input");
    }
    if (x_.size() > 0) {
        const Eigen::VectorXd bu = b_ * u;
        const Eigen::VectorXd k1 = a_ * x_ + bu;
        const Eigen::VectorXd k2 = a_ * (x_ + 0.5 * dt_ * k1) + bu;
        const Eigen::VectorXd k3 = a_ * (x_ + 0.5 * dt_ * k2) + bu;
        const Eigen::VectorXd k4 = a_ * (x_ + dt_ * k3) + bu;
        x_ += dt_ / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return output(u);
}

double LTISystem::output(double u) const {
    return c_.dot(x_) + d_ * u;
}

void LTISystem::reset() { x_.setZero(); }

double LTISystem::dc_gain() const {
    if (x_.size() == 0) return d_;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a_);
    if (!lu.isInvertible()) {
        throw std::invalid_argument("DC gain undefined: singular state matrix");
    }
    return -c_.dot(lu.solve(b_)) + d_;
}

double analytic_step_response(const TransferFunction& tf, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("time must be finite and >= 0");
    }
    if (tf.den.size() != 3) {
        throw UnsupportedCase("analytic step response requires a second-order denominator");
    }
    if (tf.num.size() != 1) {
        throw UnsupportedCase("analytic step response requires a constant numerator");
    }
    const double a1 = tf.den[1] / tf.den[0];
    const double a0 = tf.den[2] / tf.den[0];
    if (a0 <= 0.0 || a1 <= 0.0) {
        throw UnsupportedCase("analytic step response requires positive damping and stiffness");
    }
    const double wn = std::sqrt(a0);
    const double zeta = a1 / (2.0 * wn);
    if (zeta >= 1.0) {
        throw UnsupportedCase("analytic step response requires an underdamped system (0 < zeta < 1)");
    }
    const double gain = tf.num[0] / tf.den[2];
    const double wd = wn * std::sqrt(1.0 - zeta * zeta);
    const double envelope = std::exp(-zeta * wn * t);
    return gain * (1.0 - envelope * (std::cos(wd * t) +
                                     zeta * wn / wd * std::sin(wd * t)));
}

}  // namespace wristsim
