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

#include "wristsim/trace_io.hpp"

#include <fstream>
#include <stdexcept>

#include "wristsim/errors.hpp"
#include "wristsim/textio.hpp"

namespace wristsim {

namespace {
constexpr const char* kTraceHeader =
    "t,r,y_ref,y_plant,e,u_force_N,tendon1,tendon2,tendon4,tendon5";
}

void write_trace_csv(const SimTrace& trace, const std::string& path) {
    if (trace.size() == 0) {
        throw std::invalid_argument("write_trace_csv: empty trace");
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("write_trace_csv: cannot open '" + path + "'");
    }
    if (!trace.config_digest.empty()) {
        out << "# config_digest=" << trace.config_digest << "\n";
    }
    out << "# direction=" << to_string(trace.direction) << "\n";
    out << kTraceHeader << "\n";
    for (std::size_t k = 0; k < trace.size(); ++k) {
        const TendonCommand& tendon = trace.tendons[k];
        out << format_double(trace.t[k]) << ',' << format_double(trace.r[k]) << ','
            << format_double(trace.y_ref[k]) << ',' << format_double(trace.y_plant[k])
            << ',' << format_double(trace.e[k]) << ',' << format_double(trace.u_force[k])
            << ',' << format_double(tendon.tendon1) << ',' << format_double(tendon.tendon2)
            << ',' << format_double(tendon.tendon4) << ',' << format_double(tendon.tendon5)
            << '\n';
    }
    if (!out.good()) {
        throw std::runtime_error("write_trace_csv: write to '" + path + "' failed");
    }
}

SimTrace read_trace_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("read_trace_csv: cannot open '" + path + "'");
    }
    SimTrace trace;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) {
            const std::string body = trim(line);
            const std::string direction_tag = "# direction=";
            const std::string digest_tag = "# config_digest=";
            if (body.rfind(direction_tag, 0) == 0) {
                trace.direction = direction_from_string(body.substr(direction_tag.size()));
            } else if (body.rfind(digest_tag, 0) == 0) {
                trace.config_digest = body.substr(digest_tag.size());
            }
            continue;
        }
        if (!header_seen) {
            if (trim(line) != kTraceHeader) {
                throw ParseError(path, lineno, "unexpected trace header '" + trim(line) + "'");
            }
            header_seen = true;
            continue;
        }
        const std::vector<std::string> cells = split(trim(line), ',');
        if (cells.size() != 10) {
            throw ParseError(path, lineno,
                             "expected 10 columns, got " + std::to_string(cells.size()));
        }
        double v[10];
        for (int i = 0; i < 10; ++i) {
            if (!parse_double(trim(cells[i]), v[i])) {
                throw ParseError(path, lineno, "invalid number '" + cells[i] + "'");
            }
        }
        trace.t.push_back(v[0]);
        trace.r.push_back(v[1]);
        trace.y_ref.push_back(v[2]);
        trace.y_plant.push_back(v[3]);
        trace.e.push_back(v[4]);
        trace.u_force.push_back(v[5]);
        trace.tendons.push_back(TendonCommand{v[6], v[7], v[8], v[9], false});
    }
    if (!header_seen) {
        throw ParseError(path, lineno, "missing trace header");
    }
    if (trace.t.size() >= 2) {
        trace.dt = trace.t[1] - trace.t[0];
    }
    return trace;
}

void write_plot_csv(const std::map<Direction, SimTrace>& traces, const std::string& path,
                    const std::string& config_digest, std::size_t target_points) {
    if (traces.empty()) {
        throw std::invalid_argument("write_plot_csv: no traces");
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("write_plot_csv: cannot open '" + path + "'");
    }
    if (!config_digest.empty()) {
        out << "# config_digest=" << config_digest << "\n";
    }
    out << "direction,t,y_ref,y_plant,e\n";
    for (const auto& [direction, trace] : traces) {
        const std::size_t n = trace.size();
        const std::size_t stride = n <= target_points ? 1 : (n - 1) / target_points + 1;
        for (std::size_t k = 0; k < n; k += stride) {
            out << to_string(direction) << ',' << format_double(trace.t[k]) << ','
                << format_double(trace.y_ref[k]) << ',' << format_double(trace.y_plant[k])
                << ',' << format_double(trace.e[k]) << '\n';
        }
    }
    if (!out.good()) {
        throw std::runtime_error("write_plot_csv: write to '" + path + "' failed");
    }
}

void write_train_report(const TrainReport& report, const RegressionStats& regression,
                        const std::string& path, const std::string& config_digest) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("write_train_report: cannot open '" + path + "'");
    }
    if (!config_digest.empty()) {
        out << "# config_digest=" << config_digest << "\n";
    }
    const double train_n = report.train_count > 0 ? report.train_count : 1;
    const double val_n = report.val_count > 0 ? report.val_count : 1;
    out << "epochs: " << report.epochs << "\n"
        << "stop_reason: " << to_string(report.stop_reason) << "\n"
        << "gradient_norm: " << format_double(report.gradient_norm) << "\n"
        << "final_lambda: " << format_double(report.final_lambda) << "\n"
        << "training_sse: " << format_double(report.train_sse) << "\n"
        << "training_loss: " << format_double(report.train_sse / train_n) << "\n"
        << "validation_sse: " << format_double(report.val_sse) << "\n"
        << "validation_loss: " << format_double(report.val_sse / val_n) << "\n"
        << "r_value: " << format_double(regression.r_value) << "\n"
        << "mse: " << format_double(regression.mse) << "\n"
        << "train_count: " << report.train_count << "\n"
        << "val_count: " << report.val_count << "\n"
        << "test_count: " << report.test_count << "\n";
    if (!out.good()) {
        throw std::runtime_error("write_train_report: write to '" + path + "' failed");
    }
}

}  // namespace wristsim
