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

#include "wristsim/mit_mrac.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "wristsim/textio.hpp"

namespace wristsim {

MitRuleState::MitRuleState(double gamma, double theta0) : theta(theta0), gamma(gamma) {
    if (!std::isfinite(gamma) || gamma < 0.0) {
        throw std::invalid_argument("adaptation gain must be finite and >= 0");
    }
    if (!std::isfinite(theta0)) {
        throw std::invalid_argument("initial adaptive gain must be finite");
    }
}

MitRuleState mit_update(const MitRuleState& state, double error,
                        double model_output, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("mit_update: dt must be finite and > 0");
    }
    if (!std::isfinite(error) || !std::isfinite(model_output)) {
        throw std::invalid_argument("mit_update: inputs must be finite");
    }
    MitRuleState next = state;
    next.theta = state.theta + dt * (-state.gamma * error * model_output);
    if (!std::isfinite(next.theta)) {
        throw DivergenceError("mit_update: adaptive gain diverged to a non-finite value");
    }
    return next;
}

namespace {

double square_dither(double t, double amp, double period) {
    if (amp == 0.0) return 0.0;
    return std::fmod(t, period) < 0.5 * period ? amp : -amp;
}

}  // namespace

std::vector<DatasetRecord> run_mrac(LTISystem& plant, LTISystem& refmodel,
                                    const std::function<double(double)>& reference,
                                    const MracOptions& options) {
    if (plant.dt() != refmodel.dt()) {
        throw std::invalid_argument("run_mrac: plant and reference model must share dt");
    }
    if (!(options.duration > 0.0)) {
        throw std::invalid_argument("run_mrac: duration must be > 0");
    }
    if (!(options.blowup_limit > 0.0)) {
        throw std::invalid_argument("run_mrac: blowup_limit must be > 0");
    }
    if (!std::isfinite(options.feedback_gain) || options.feedback_gain < 0.0) {
        throw std::invalid_argument("run_mrac: feedback gain must be finite and >= 0");
    }
    if (options.dither_amp != 0.0 && !(options.dither_period > 0.0)) {
        throw std::invalid_argument("run_mrac: dither period must be > 0");
    }

    const double dt = plant.dt();
    const double ref_scale = 1.0 / refmodel.dc_gain();
    const long n = std::lround(options.duration / dt);

    plant.reset();
    refmodel.reset();
    MitRuleState adapt(options.gamma, options.theta0);

    std::vector<DatasetRecord> records;
    records.reserve(static_cast<std::size_t>(n) + 1);

    double y_plant = plant.output();
    double y_model = refmodel.output();
    for (long k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) * dt;
        const double r = reference(t);
        if (!std::isfinite(r)) {
            throw MracDivergence("run_mrac: non-finite reference value", std::move(records));
        }
        const double e = y_plant - y_model;
        const double u = adapt.theta * r - options.feedback_gain * e;
        records.push_back({t, r, y_plant, y_model, e, u, adapt.theta});
        if (!std::isfinite(e) || std::abs(e) > options.blowup_limit ||
            std::abs(adapt.theta) > options.blowup_limit) {
            throw MracDivergence(
                "run_mrac: diverged at t = " + format_double(t) +
                    " (|e| = " + format_double(std::abs(e)) +
                    ", |theta| = " + format_double(std::abs(adapt.theta)) + ")",
                std::move(records));
        }
        if (k == n) break;
        adapt = mit_update(adapt, e, y_model, dt);
        y_plant = plant.step(u + square_dither(t, options.dither_amp, options.dither_period));
        y_model = refmodel.step(r * ref_scale);
    }
    return records;
}

void export_dataset(const std::vector<DatasetRecord>& records,
                    const std::string& path, const std::string& config_digest) {
    if (records.empty()) {
        throw std::invalid_argument("export_dataset: record list is empty");
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("export_dataset: cannot open '" + path + "' for writing");
    }
    if (!config_digest.empty()) {
        out << "# config_digest=" << config_digest << "\n";
    }
    out << "t,r,y_plant,y_model,e,u_force_N,theta\n";
    for (const DatasetRecord& rec : records) {
        out << format_double(rec.t) << ',' << format_double(rec.r) << ','
            << format_double(rec.y_plant) << ',' << format_double(rec.y_model) << ','
            << format_double(rec.e) << ',' << format_double(rec.u_force) << ','
            << format_double(rec.theta) << '\n';
    }
    if (!out.good()) {
        throw std::runtime_error("export_dataset: write to '" + path + "' failed");
    }
}

std::vector<DatasetRecord> import_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("import_dataset: cannot open '" + path + "'");
    }
    std::vector<DatasetRecord> records;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        if (!header_seen) {
            if (trim(line) != "t,r,y_plant,y_model,e,u_force_N,theta") {
                throw ParseError(path, lineno, "unexpected dataset header '" + trim(line) + "'");
            }
            header_seen = true;
            continue;
        }
        const std::vector<std::string> cells = split(trim(line), ',');
        if (cells.size() != 7) {
            throw ParseError(path, lineno, "expected 7 columns, got " +
                                               std::to_string(cells.size()));
        }
        double v[7];
        for (int i = 0; i < 7; ++i) {
            if (!parse_double(trim(cells[i]), v[i])) {
                throw ParseError(path, lineno, "invalid number '" + cells[i] + "'");
            }
        }
        records.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6]});
    }
    if (!header_seen) {
        throw ParseError(path, lineno, "missing dataset header");
    }
    return records;
}

}  // namespace wristsim
