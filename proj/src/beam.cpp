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

#include "wristsim/beam.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wristsim {

namespace {

void require_positive(double value, const char* name) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw std::invalid_argument(std::string("BeamParams: ") + name +
                                    " must be finite and > 0");
    }
}

void require_axial_range(double x, double length) {
    if (!std::isfinite(x) || x < 0.0 || x > length) {
        throw std::invalid_argument("axial position outside [0, L]");
    }
}

void require_finite_force(double force) {
    if (!std::isfinite(force)) {
        throw std::invalid_argument("tip load must be finite");
    }
}

}  // namespace

ProfileVariant profile_variant_from_string(const std::string& name) {
    if (name == "paper") return ProfileVariant::kPaper;
    if (name == "corrected") return ProfileVariant::kCorrected;
    throw std::invalid_argument("unknown profile variant '" + name +
                                "' (expected 'paper' or 'corrected')");
}

std::string to_string(ProfileVariant variant) {
    return variant == ProfileVariant::kPaper ? "paper" : "corrected";
}

BeamParams::BeamParams(double youngs_modulus, double area_moment, double length,
                       double shear_coeff, double cross_section_area,
                       double shear_modulus, double curvature_radius)
    : youngs_modulus(youngs_modulus),
      area_moment(area_moment),
      length(length),
      shear_coeff(shear_coeff),
      cross_section_area(cross_section_area),
      shear_modulus(shear_modulus),
      curvature_radius(curvature_radius) {
    require_positive(youngs_modulus, "E");
    require_positive(area_moment, "I");
    require_positive(length, "L");
    require_positive(shear_coeff, "K");
    require_positive(cross_section_area, "A");
    require_positive(shear_modulus, "G");
    require_positive(curvature_radius, "R");
}

TipPose tip_pose(const BeamParams& params, double alpha) {
    if (!std::isfinite(alpha) || std::abs(alpha) >= std::numbers::pi) {
        throw std::invalid_argument("bending angle must be finite with |alpha| < pi");
    }
    const double r = params.curvature_radius;
    return TipPose{r * std::sin(alpha), r * (1.0 - std::cos(alpha)), alpha};
}

double angle_from_arc(const BeamParams& params) {
    return params.length / params.curvature_radius;
}

double deflection_profile_paper(const BeamParams& params, double force, double x) {
    require_finite_force(force);
    require_axial_range(x, params.length);
    const double l = params.length;
    const double ei = params.youngs_modulus * params.area_moment;
    const double kag =
        params.shear_coeff * params.cross_section_area * params.shear_modulus;
    return force * (l - x) / kag - force * x / (2.0 * ei) * (l * l - x * x / 3.0) +
           force * l * l * l / (3.0 * ei);
}

double deflection_profile_corrected(const BeamParams& params, double force, double x) {
    require_finite_force(force);
    require_axial_range(x, params.length);
    const double l = params.length;
    const double ei = params.youngs_modulus * params.area_moment;
    const double kag =
        params.shear_coeff * params.cross_section_area * params.shear_modulus;
    return force * x / kag + force * x * x * (3.0 * l - x) / (6.0 * ei);
}

double deflection_profile(const BeamParams& params, ProfileVariant variant,
                          double force, double x) {
    return variant == ProfileVariant::kPaper
               ? deflection_profile_paper(params, force, x)
               : deflection_profile_corrected(params, force, x);
}

double tip_deflection_from_moment(const BeamParams& params, double force) {
    require_finite_force(force);
    return force * static_gain(params);
}

double static_gain(const BeamParams& params) {
    const double l = params.length;
    return params.curvature_radius * l * l /
           (2.0 * params.youngs_modulus * params.area_moment);
}

}  // namespace wristsim
