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
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "wristsim/beam.hpp"

using namespace wristsim;

namespace {

BeamParams default_params() {
    return BeamParams(1e6, 1e-8, 0.1, 0.9, 1e-4, 4e5, 0.05);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

bool rel_close(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

// The printed profile cancels to zero at x = L, so deflection comparisons
// use the unit-load tip deflection as the reference scale there.
bool close_at_scale(double a, double b, double rel, double scale) {
    return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), scale});
}

}  // namespace

TEST_CASE("beam parameters reject non-positive and non-finite values") {
    CHECK_THROWS_AS(BeamParams(0.0, 1e-8, 0.1, 0.9, 1e-4, 4e5, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(BeamParams(1e6, -1e-8, 0.1, 0.9, 1e-4, 4e5, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(BeamParams(1e6, 1e-8, 0.1, 0.9, 1e-4, 4e5, 0.0), std::invalid_argument);
    const double nan = std::nan("");
    CHECK_THROWS_AS(BeamParams(nan, 1e-8, 0.1, 0.9, 1e-4, 4e5, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(BeamParams(1e6, 1e-8, 0.1, 0.9, 1e-4, 4e5,
                               std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("tip pose on the constant-curvature arc") {
    BeamParams p(1e6, 1e-8, 0.1, 0.9, 1e-4, 4e5, 0.1);
    const TipPose zero = tip_pose(p, 0.0);
    CHECK(zero.x == 0.0);
    CHECK(zero.y == 0.0);
    CHECK(zero.alpha == 0.0);

    const TipPose quarter = tip_pose(p, std::numbers::pi / 2.0);
    CHECK(quarter.x == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(quarter.y == doctest::Approx(0.1).epsilon(1e-12));

    // 30 degrees with R chosen as L/alpha.
    const double alpha = std::numbers::pi / 6.0;
    BeamParams arc(1e6, 1e-8, 0.1, 0.9, 1e-4, 4e5, 0.1 / alpha);
    const TipPose pose = tip_pose(arc, alpha);
    CHECK(pose.x == doctest::Approx(0.09549296585513720).epsilon(1e-12));
    CHECK(pose.y == doctest::Approx(0.025587263083736788).epsilon(1e-12));

    CHECK_THROWS_AS(tip_pose(p, std::numbers::pi), std::invalid_argument);
    CHECK_THROWS_AS(tip_pose(p, -4.0), std::invalid_argument);
    CHECK_THROWS_AS(tip_pose(p, std::nan("")), std::invalid_argument);
}

TEST_CASE("tip pose stays on the circle of radius R about (0, R)") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double r = uniform(rng, 0.01, 10.0);
        const double alpha = uniform(rng, -3.14, 3.14);
        BeamParams p(1e6, 1e-8, 0.1, 0.9, 1e-4, 4e5, r);
        const TipPose pose = tip_pose(p, alpha);
        const double residual = pose.x * pose.x + (pose.y - r) * (pose.y - r) - r * r;
        CHECK(std::abs(residual) <= 1e-9 * r * r);
    }
}

TEST_CASE("angle from arc length") {
    CHECK(angle_from_arc(BeamParams(1e6, 1e-8, 0.1, 0.9, 1e-4, 4e5, 0.1)) == 1.0);
    CHECK(angle_from_arc(BeamParams(1e6, 1e-8, 0.1, 0.9, 1e-4, 4e5, 0.2)) == 0.5);
    const double alpha = std::numbers::pi / 6.0;
    CHECK(angle_from_arc(BeamParams(1e6, 1e-8, 0.1, 0.9, 1e-4, 4e5, 0.1 / alpha)) ==
          doctest::Approx(alpha).epsilon(1e-12));
    // The rounded radius from the arc of the 30-degree bend.
    CHECK(angle_from_arc(BeamParams(1e6, 1e-8, 0.1, 0.9, 1e-4, 4e5, 0.1910)) ==
          doctest::Approx(alpha).epsilon(1e-4));
}

TEST_CASE("published deflection profile, evaluated literally") {
    const BeamParams p = default_params();
    for (double x : {0.0, 0.02, 0.05, 0.1}) {
        CHECK(deflection_profile_paper(p, 0.0, x) == 0.0);
    }
    // At x = 0 the shear and tip terms add up: F L/(KAG) + F L^3/(3EI).
    CHECK(deflection_profile_paper(p, 1.0, 0.0) ==
          doctest::Approx(0.1 / 36.0 + 0.001 / 0.03).epsilon(1e-14));
    CHECK(deflection_profile_paper(p, 1.0, 0.0) ==
          doctest::Approx(0.036111111111111108).epsilon(1e-14));
    // At x = L the bracket cancels the tip term exactly, so the printed
    // expression evaluates to zero there (not to F L^3/(3EI)).
    CHECK(std::abs(deflection_profile_paper(p, 1.0, 0.1)) <= 1e-16);

    CHECK_THROWS_AS(deflection_profile_paper(p, 1.0, -0.01), std::invalid_argument);
    CHECK_THROWS_AS(deflection_profile_paper(p, 1.0, 0.11), std::invalid_argument);
    CHECK_THROWS_AS(deflection_profile_paper(p, std::nan(""), 0.05), std::invalid_argument);
}

TEST_CASE("clamped-end corrected profile") {
    const BeamParams p = default_params();
    CHECK(deflection_profile_corrected(p, 3.7, 0.0) == 0.0);
    for (double x : {0.0, 0.03, 0.1}) {
        CHECK(deflection_profile_corrected(p, 0.0, x) == 0.0);
    }
    CHECK(deflection_profile_corrected(p, 1.0, 0.1) ==
          doctest::Approx(0.036111111111111108).epsilon(1e-14));
    CHECK_THROWS_AS(deflection_profile_corrected(p, 1.0, 0.2), std::invalid_argument);
}

TEST_CASE("the two variants are mirror images and agree on the tip value") {
    const BeamParams p = default_params();
    // Tip deflection: paper coordinate 0 is the free end, corrected is at L.
    CHECK(rel_close(deflection_profile_paper(p, 1.0, 0.0),
                    deflection_profile_corrected(p, 1.0, p.length), 1e-12));
    const double tip_unit = deflection_profile_corrected(p, 1.0, p.length);
    std::mt19937_64 rng(12);
    for (int i = 0; i < 1000; ++i) {
        const double x = uniform(rng, 0.0, p.length);
        const double f = uniform(rng, -5.0, 5.0);
        CHECK(close_at_scale(deflection_profile_paper(p, f, x),
                             deflection_profile_corrected(p, f, p.length - x), 1e-12,
                             std::abs(f) * tip_unit));
    }
}

TEST_CASE("superposition in the load for both variants") {
    const BeamParams p = default_params();
    const double tip_unit = deflection_profile_corrected(p, 1.0, p.length);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const double f = uniform(rng, -5.0, 5.0);
        const double a = uniform(rng, -3.0, 3.0);
        const double x = uniform(rng, 0.0, p.length);
        const double scale = std::abs(a * f) * tip_unit;
        CHECK(close_at_scale(deflection_profile_paper(p, a * f, x),
                             a * deflection_profile_paper(p, f, x), 1e-12, scale));
        CHECK(close_at_scale(deflection_profile_corrected(p, a * f, x),
                             a * deflection_profile_corrected(p, f, x), 1e-12, scale));
    }
}

TEST_CASE("corrected profile boundary conditions") {
    const BeamParams p = default_params();
    CHECK(deflection_profile_corrected(p, 1.0, 0.0) == 0.0);
    // Bending slope at the clamped end via a forward difference of the
    // bending component (total minus the linear shear part).
    const double h = 1e-10;
    const double kag = p.shear_coeff * p.cross_section_area * p.shear_modulus;
    const double bend_h = deflection_profile_corrected(p, 1.0, h) - h / kag;
    CHECK(std::abs(bend_h / h) < 1e-9);
}

TEST_CASE("corrected tip approaches the shear-free cantilever limit") {
    // Scaling G by 1e9 sends the shear term to zero.
    BeamParams stiff(1e6, 1e-8, 0.1, 0.9, 1e-4, 4e5 * 1e9, 0.05);
    const double tip = deflection_profile_corrected(stiff, 1.0, stiff.length);
    const double euler = 1.0 * 0.001 / (3.0 * 1e6 * 1e-8);
    CHECK(rel_close(tip, euler, 1e-6));
}

TEST_CASE("tip deflection from the tendon moment") {
    const BeamParams p = default_params();
    CHECK(tip_deflection_from_moment(p, 0.0) == 0.0);
    CHECK(tip_deflection_from_moment(p, 1.0) == doctest::Approx(0.025).epsilon(1e-14));
    CHECK(tip_deflection_from_moment(p, 2.0) ==
          doctest::Approx(2.0 * tip_deflection_from_moment(p, 1.0)).epsilon(1e-15));
    std::mt19937_64 rng(14);
    for (int i = 0; i < 200; ++i) {
        const double f = uniform(rng, -10.0, 10.0);
        CHECK(rel_close(tip_deflection_from_moment(p, f), static_gain(p) * f, 1e-15));
    }
}

TEST_CASE("static gain scalings") {
    const BeamParams p = default_params();
    CHECK(static_gain(p) == doctest::Approx(0.025).epsilon(1e-14));
    BeamParams double_r(1e6, 1e-8, 0.1, 0.9, 1e-4, 4e5, 0.1);
    CHECK(static_gain(double_r) == doctest::Approx(2.0 * static_gain(p)).epsilon(1e-14));
    BeamParams double_e(2e6, 1e-8, 0.1, 0.9, 1e-4, 4e5, 0.05);
    CHECK(static_gain(double_e) == doctest::Approx(0.5 * static_gain(p)).epsilon(1e-14));
}

TEST_CASE("profile variant dispatch and names") {
    const BeamParams p = default_params();
    CHECK(deflection_profile(p, ProfileVariant::kPaper, 1.0, 0.0) ==
          deflection_profile_paper(p, 1.0, 0.0));
    CHECK(deflection_profile(p, ProfileVariant::kCorrected, 1.0, 0.05) ==
          deflection_profile_corrected(p, 1.0, 0.05));
    CHECK(profile_variant_from_string("paper") == ProfileVariant::kPaper);
    CHECK(profile_variant_from_string("corrected") == ProfileVariant::kCorrected);
    CHECK_THROWS_AS(profile_variant_from_string("euler"), std::invalid_argument);
    CHECK(to_string(ProfileVariant::kPaper) == "paper");
}
