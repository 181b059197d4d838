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

#include <cmath>
#include <doctest.h>
#include <vector>

#include "wristsim/errors.hpp"
#include "wristsim/lti.hpp"

using namespace wristsim;

namespace {

TransferFunction wrist_reference() { return TransferFunction({-4.0}, {1.0, 3.0, 5.0}); }

bool rel_close(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST_CASE("transfer function validation") {
    CHECK_THROWS_AS(TransferFunction({1.0, 2.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(TransferFunction({1.0}, {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(TransferFunction({}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(TransferFunction({std::nan("")}, {1.0, 1.0}), std::invalid_argument);
    CHECK(wrist_reference().dc_gain() == -0.8);
}

TEST_CASE("controllable canonical realization") {
    LTISystem sys(wrist_reference(), 1e-3);
    REQUIRE(sys.order() == 2);
    CHECK(sys.state_matrix()(0, 0) == 0.0);
    CHECK(sys.state_matrix()(0, 1) == 1.0);
    CHECK(sys.state_matrix()(1, 0) == -5.0);
    CHECK(sys.state_matrix()(1, 1) == -3.0);
    CHECK(sys.input_vector()(0) == 0.0);
    CHECK(sys.input_vector()(1) == 1.0);
    CHECK(sys.output_vector()(0) == -4.0);
    CHECK(sys.output_vector()(1) == 0.0);
    CHECK(sys.feedthrough() == 0.0);
    CHECK(rel_close(sys.dc_gain(), -0.8, 1e-12));

    LTISystem first(TransferFunction({1.0}, {1.0, 1.0}), 1e-3);
    REQUIRE(first.order() == 1);
    CHECK(first.state_matrix()(0, 0) == -1.0);
    CHECK(first.input_vector()(0) == 1.0);
    CHECK(first.output_vector()(0) == 1.0);
    CHECK(first.feedthrough() == 0.0);

    CHECK_THROWS_AS(LTISystem(wrist_reference(), 0.0), std::invalid_argument);
}

TEST_CASE("matched numerator and denominator act as unity gain") {
    LTISystem sys(TransferFunction({1.0, 2.0}, {1.0, 2.0}), 1e-3);
    for (int k = 0; k < 2000; ++k) {
        CHECK(sys.step(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("zero input from rest stays at rest") {
    LTISystem sys(wrist_reference(), 1e-3);
    for (int k = 0; k < 1000; ++k) {
        CHECK(sys.step(0.0) == 0.0);
    }
}

TEST_CASE("step response matches the analytic second-order solution") {
    LTISystem sys(wrist_reference(), 1e-3);
    const TransferFunction tf = wrist_reference();
    double max_err = 0.0;
    double y = sys.output();
    for (int k = 0; k <= 10000; ++k) {
        const double analytic = analytic_step_response(tf, k * 1e-3);
        max_err = std::max(max_err, std::abs(y - analytic));
        if (k < 10000) y = sys.step(1.0);
    }
    CHECK(max_err < 1e-6);

    LTISystem probe(wrist_reference(), 1e-3);
    double y1 = 0.0;
    for (int k = 0; k < 1000; ++k) y1 = probe.step(1.0);
    CHECK(y1 == doctest::Approx(-0.65475691971220985).epsilon(1e-9));
    for (int k = 1000; k < 10000; ++k) y1 = probe.step(1.0);
    CHECK(std::abs(y1 - (-0.8)) < 1e-4);
}

TEST_CASE("analytic step response values") {
    const TransferFunction tf = wrist_reference();
    CHECK(analytic_step_response(tf, 0.0) == 0.0);
    CHECK(analytic_step_response(tf, 1.0) ==
          doctest::Approx(-0.65475691971220985).epsilon(1e-12));
    CHECK(analytic_step_response(tf, 0.5) ==
          doctest::Approx(-0.29269083341804663).epsilon(1e-12));
    CHECK(rel_close(analytic_step_response(tf, 40.0), -0.8, 1e-9));

    // 2% settling sits at 2.688 s: the response leaves the band at 2.687 s
    // and stays inside from 2.688 s on (so near, not at, 4/(zeta wn) = 2.67).
    CHECK(std::abs(analytic_step_response(tf, 2.667) + 0.8) ==
          doctest::Approx(0.016878363415798844).epsilon(1e-9));
    CHECK(std::abs(analytic_step_response(tf, 2.687) + 0.8) > 0.016);
    for (int k = 2688; k <= 10000; ++k) {
        CHECK(std::abs(analytic_step_response(tf, k * 1e-3) + 0.8) <= 0.016);
    }
}

TEST_CASE("analytic step response rejects unsupported systems") {
    CHECK_THROWS_AS(analytic_step_response(TransferFunction({1.0}, {1.0, 30.0, 5.0}), 1.0),
                    UnsupportedCase);  // overdamped
    const double wn = std::sqrt(5.0);
    CHECK_THROWS_AS(
        analytic_step_response(TransferFunction({1.0}, {1.0, 2.0 * wn, 5.0}), 1.0),
        UnsupportedCase);  // critically damped
    CHECK_THROWS_AS(analytic_step_response(TransferFunction({1.0}, {1.0, 1.0}), 1.0),
                    UnsupportedCase);  // first order
    CHECK_THROWS_AS(
        analytic_step_response(TransferFunction({1.0, 0.0}, {1.0, 3.0, 5.0}), 1.0),
        UnsupportedCase);  // numerator with a zero
    CHECK_THROWS_AS(analytic_step_response(wrist_reference(), -1.0), std::invalid_argument);
}

TEST_CASE("halving the step size barely changes the trajectory") {
    LTISystem coarse(wrist_reference(), 1e-3);
    LTISystem fine(wrist_reference(), 5e-4);
    double yc = 0.0;
    double yf = 0.0;
    for (int k = 0; k < 5000; ++k) {
        yc = coarse.step(1.0);
        yf = fine.step(1.0);
        yf = fine.step(1.0);
        if (k % 100 == 0) CHECK(std::abs(yc - yf) < 1e-8);
    }
    CHECK(std::abs(yc - yf) < 1e-8);
}

TEST_CASE("linearity and determinism of the integrator") {
    LTISystem a(wrist_reference(), 1e-3);
    LTISystem b(wrist_reference(), 1e-3);
    for (int k = 0; k < 3000; ++k) {
        const double u = std::sin(0.01 * k);
        const double ya = a.step(u);
        const double yb = b.step(2.0 * u);
        CHECK(rel_close(2.0 * ya, yb, 1e-12));
    }

    LTISystem c(wrist_reference(), 1e-3);
    LTISystem d(wrist_reference(), 1e-3);
    for (int k = 0; k < 2000; ++k) {
        CHECK(c.step(1.0) == d.step(1.0));  // bit-identical
    }
    c.reset();
    CHECK(c.output() == 0.0);
    CHECK(c.state().norm() == 0.0);

    CHECK_THROWS_AS(c.step(std::nan("")), DivergenceError);
}
