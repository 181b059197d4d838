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
#include <vector>

namespace wristsim {

/// SISO transfer function as numerator/denominator coefficients in
/// descending powers of s. Must be proper (deg num <= deg den) with a
/// nonzero leading denominator coefficient.
struct TransferFunction {
    std::vector<double> num;
    std::vector<double> den;

    TransferFunction(std::vector<double> numerator, std::vector<double> denominator);

    /// Gain at s = 0, num.back()/den.back(). Throws if the denominator
    /// constant term is zero.
    double dc_gain() const;
};

/// State-space realization of a SISO transfer function in controllable
/// canonical form, integrated with fixed-step classical Runge-Kutta.
///
/// The object owns its state; step() mutates it. Instances are cheap to
/// copy, and independent copies may run on different threads.
class LTISystem {
public:
    LTISystem(const TransferFunction& tf, double dt);

    /// Advances the state by one sample period with the input held constant
    /// (zero-order hold) and returns y = C x + D u after the update.
    double step(double u);

    /// Output for the current state, y = C x + D u.
    double output(double u = 0.0) const;

    /// Returns the state to zero.
    void reset();

    /// Steady-state output for a unit input. Throws for a singular state
    /// matrix (a pole at s = 0 has no finite DC gain).
    double dc_gain() const;

    double dt() const { return dt_; }
    int order() const { return static_cast<int>(a_.rows()); }
    const Eigen::MatrixXd& state_matrix() const { return a_; }
    const Eigen::VectorXd& input_vector() const { return b_; }
    const Eigen::VectorXd& output_vector() const { return c_; }
    double feedthrough() const { return d_; }
    const Eigen::VectorXd& state() const { return x_; }

private:
    Eigen::MatrixXd a_;
    Eigen::VectorXd b_;
    Eigen::VectorXd c_;
    double d_ = 0.0;
    Eigen::VectorXd x_;
    double dt_;
};

/// Closed-form unit-step response of an underdamped second-order system
/// k wn^2 / (s^2 + 2 z wn s + wn^2) at time t >= 0:
///   k (1 - e^{-z wn t} (cos(wd t) + z wn / wd sin(wd t))),  wd = wn sqrt(1-z^2)
///
/// The transfer function must have a constant numerator and a second-order
/// denominator with 0 < z < 1; anything else throws UnsupportedCase.
double analytic_step_response(const TransferFunction& tf, double t);

}  // namespace wristsim
