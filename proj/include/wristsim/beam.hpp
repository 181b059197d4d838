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

#include <string>

namespace wristsim {

/// Which cantilever deflection profile to evaluate.
///
/// `kPaper` is the published closed-form expression kept verbatim. Its
/// coordinate runs from the free end, so it places the maximum deflection at
/// x = 0 instead of satisfying the clamped-end condition there.
/// `kCorrected` is the standard Timoshenko cantilever solution with
/// y(0) = 0 and zero bending slope at the clamped end. The two are mirror
/// images: paper(x) == corrected(L - x).
enum class ProfileVariant { kPaper, kCorrected };

ProfileVariant profile_variant_from_string(const std::string& name);
std::string to_string(ProfileVariant variant);

/// Material and geometry constants of the flexible wrist segment modeled as
/// a Timoshenko cantilever bending along a circular arc.
struct BeamParams {
    double youngs_modulus;      ///< E [Pa]
    double area_moment;         ///< I [m^4]
    double length;              ///< L [m]
    double shear_coeff;         ///< K, dimensionless shear correction factor
    double cross_section_area;  ///< A [m^2]
    double shear_modulus;       ///< G [Pa]
    double curvature_radius;    ///< R [m]

    /// All fields must be finite and strictly positive.
    BeamParams(double youngs_modulus, double area_moment, double length,
               double shear_coeff, double cross_section_area,
               double shear_modulus, double curvature_radius);
};

/// Planar pose of the segment tip under the constant-curvature assumption.
/// (x, y) lies on the circle of radius R centered at (0, R).
struct TipPose {
    double x;      ///< [m]
    double y;      ///< [m]
    double alpha;  ///< bending angle [rad]
};

/// Tip position for a segment bent to angle `alpha` on an arc of radius R:
/// x = R sin(alpha), y = R (1 - cos(alpha)). Requires |alpha| < pi.
TipPose tip_pose(const BeamParams& params, double alpha);

/// Bending angle implied by the arc geometry, alpha = L / R.
double angle_from_arc(const BeamParams& params);

/// Transverse deflection at axial position x in [0, L] for a concentrated
/// tip load F, evaluated with the published expression:
///   F(L-x)/(KAG) - Fx/(2EI) (L^2 - x^2/3) + FL^3/(3EI)
double deflection_profile_paper(const BeamParams& params, double force, double x);

/// Transverse deflection at axial position x in [0, L] for a concentrated
/// tip load F, from the clamped-end Timoshenko cantilever solution:
///   Fx/(KAG) + Fx^2 (3L - x)/(6EI)
double deflection_profile_corrected(const BeamParams& params, double force, double x);

/// Dispatch on the configured variant.
double deflection_profile(const BeamParams& params, ProfileVariant variant,
                          double force, double x);

/// Tip deflection under the moment M = F R of a tendon tension F:
/// M L^2 / (2 E I).
double tip_deflection_from_moment(const BeamParams& params, double force);

/// Static tip deflection per unit tendon tension, R L^2 / (2 E I) [m/N].
double static_gain(const BeamParams& params);

}  // namespace wristsim
