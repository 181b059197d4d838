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

#include "wristsim/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "wristsim/errors.hpp"
#include "wristsim/textio.hpp"

namespace wristsim {

namespace {

double parse_double_or_throw(const std::string& origin, int lineno, const std::string& raw) {
    double v = 0.0;
    if (!parse_double(trim(raw), v)) {
        throw ParseError(origin, lineno, "invalid number '" + trim(raw) + "'");
    }
    return v;
}

std::vector<double> parse_double_list(const std::string& origin, int lineno,
                                      const std::string& raw) {
    const std::string body = trim(raw);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        throw ParseError(origin, lineno, "expected a bracketed list, got '" + body + "'");
    }
    std::vector<double> values;
    for (const std::string& cell : split(body.substr(1, body.size() - 2), ',')) {
        values.push_back(parse_double_or_throw(origin, lineno, cell));
    }
    return values;
}

std::vector<int> parse_int_list(const std::string& origin, int lineno,
                                const std::string& raw) {
    std::vector<int> values;
    for (double v : parse_double_list(origin, lineno, raw)) {
        const int i = static_cast<int>(v);
        if (static_cast<double>(i) != v) {
            throw ParseError(origin, lineno, "expected integers in list");
        }
        values.push_back(i);
    }
    return values;
}

std::uint64_t parse_u64(const std::string& origin, int lineno, const std::string& raw) {
    const std::string body = trim(raw);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc() || ptr != body.data() + body.size()) {
        throw ParseError(origin, lineno, "invalid unsigned integer '" + body + "'");
    }
    return v;
}

int parse_int(const std::string& origin, int lineno, const std::string& raw) {
    const std::string body = trim(raw);
    int v = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc() || ptr != body.data() + body.size()) {
        throw ParseError(origin, lineno, "invalid integer '" + body + "'");
    }
    return v;
}

bool parse_bool(const std::string& origin, int lineno, const std::string& raw) {
    const std::string body = trim(raw);
    if (body == "true") return true;
    if (body == "false") return false;
    throw ParseError(origin, lineno, "expected 'true' or 'false', got '" + body + "'");
}

std::string format_list(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += format_double(values[i]);
    }
    return out + "]";
}

std::string format_list(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(values[i]);
    }
    return out + "]";
}

using Setter = std::function<void(Config&, const std::string& origin, int lineno,
                                  const std::string& value)>;

const std::map<std::string, std::map<std::string, Setter>>& key_table() {
    auto num = [](double Config::Beam::* field) {
        return [field](Config& c, const std::string& o, int l, const std::string& v) {
            c.beam.*field = parse_double_or_throw(o, l, v);
        };
    };
    static const std::map<std::string, std::map<std::string, Setter>> table = {
        {"beam",
         {
             {"E", num(&Config::Beam::e)},
             {"I", num(&Config::Beam::i)},
             {"L", num(&Config::Beam::l)},
             {"K", num(&Config::Beam::k)},
             {"A", num(&Config::Beam::a)},
             {"G", num(&Config::Beam::g)},
             {"R", num(&Config::Beam::r)},
             {"profile_variant",
              [](Config& c, const std::string&, int, const std::string& v) {
                  c.beam.profile_variant = profile_variant_from_string(trim(v));
              }},
         }},
        {"reference",
         {
             {"num",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.reference.num = parse_double_list(o, l, v);
              }},
             {"den",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.reference.den = parse_double_list(o, l, v);
              }},
             {"dt",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.reference.dt = parse_double_or_throw(o, l, v);
              }},
         }},
        {"plant",
         {
             {"zeta",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.plant.zeta = parse_double_or_throw(o, l, v);
              }},
             {"omega_n",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.plant.omega_n = parse_double_or_throw(o, l, v);
              }},
         }},
        {"mrac",
         {
             {"gamma",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.mrac.gamma = parse_double_or_throw(o, l, v);
              }},
             {"duration",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.mrac.duration = parse_double_or_throw(o, l, v);
              }},
             {"blowup_limit",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.mrac.blowup_limit = parse_double_or_throw(o, l, v);
              }},
             {"feedback_gain",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.mrac.feedback_gain = parse_double_or_throw(o, l, v);
              }},
             {"dither_amp",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.mrac.dither_amp = parse_double_or_throw(o, l, v);
              }},
             {"dither_period",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.mrac.dither_period = parse_double_or_throw(o, l, v);
              }},
         }},
        {"nn",
         {
             {"layers",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.nn.layers = parse_int_list(o, l, v);
              }},
             {"seed",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.nn.seed = parse_u64(o, l, v);
              }},
             {"max_epochs",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.nn.max_epochs = parse_int(o, l, v);
              }},
             {"lambda0",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.nn.lambda0 = parse_double_or_throw(o, l, v);
              }},
             {"lambda_up",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.nn.lambda_up = parse_double_or_throw(o, l, v);
              }},
             {"lambda_down",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.nn.lambda_down = parse_double_or_throw(o, l, v);
              }},
             {"grad_tol",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.nn.grad_tol = parse_double_or_throw(o, l, v);
              }},
             {"goal_sse",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  const std::string body = trim(v);
                  if (body == "inf") {
                      c.nn.goal_sse = std::numeric_limits<double>::infinity();
                  } else {
                      c.nn.goal_sse = parse_double_or_throw(o, l, v);
                  }
              }},
             {"output_activation",
              [](Config& c, const std::string&, int, const std::string& v) {
                  c.nn.output_activation = activation_from_string(trim(v));
              }},
         }},
        {"train",
         {
             {"val_fraction",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.train.val_fraction = parse_double_or_throw(o, l, v);
              }},
             {"stride",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.train.stride = parse_int(o, l, v);
              }},
             {"washout",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.train.washout = parse_double_or_throw(o, l, v);
              }},
         }},
        {"loop",
         {
             {"direction",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  const std::string body = trim(v);
                  if (body != "all") direction_from_string(body);  // validate
                  (void)o;
                  (void)l;
                  c.loop.direction = body;
              }},
             {"angle_deg",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.loop.angle_deg = parse_double_or_throw(o, l, v);
              }},
             {"duration",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.loop.duration = parse_double_or_throw(o, l, v);
              }},
             {"online",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.loop.online = parse_bool(o, l, v);
              }},
             {"eta",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.loop.eta = parse_double_or_throw(o, l, v);
              }},
         }},
        {"metrics",
         {
             {"band",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.metrics.band = parse_double_or_throw(o, l, v);
              }},
             {"window",
              [](Config& c, const std::string& o, int l, const std::string& v) {
                  c.metrics.window = parse_double_or_throw(o, l, v);
              }},
         }},
    };
    return table;
}

}  // namespace

Config parse_config_text(const std::string& text, const std::string& origin) {
    Config config;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    const auto& table = key_table();
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(line);
        const std::size_t comment = body.find('#');
        if (comment != std::string::npos) body = trim(body.substr(0, comment));
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']') {
                throw ParseError(origin, lineno, "unterminated section header");
            }
            section = trim(body.substr(1, body.size() - 2));
            if (table.find(section) == table.end()) {
                throw ParseError(origin, lineno, "unknown section [" + section + "]");
            }
            continue;
        }
        const std::size_t eq = body.find('=');
        if (eq == std::string::npos) {
            throw ParseError(origin, lineno, "expected 'key = value'");
        }
        if (section.empty()) {
            throw ParseError(origin, lineno, "key outside any section");
        }
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        const auto& section_table = table.at(section);
        const auto it = section_table.find(key);
        if (it == section_table.end()) {
            throw ParseError(origin, lineno,
                             "unknown key '" + key + "' in section [" + section + "]");
        }
        it->second(config, origin, lineno, value);
    }
    return config;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

std::string serialize_config(const Config& c) {
    std::ostringstream out;
    out << "[beam]\n"
        << "E = " << format_double(c.beam.e) << "\n"
        << "I = " << format_double(c.beam.i) << "\n"
        << "L = " << format_double(c.beam.l) << "\n"
        << "K = " << format_double(c.beam.k) << "\n"
        << "A = " << format_double(c.beam.a) << "\n"
        << "G = " << format_double(c.beam.g) << "\n"
        << "R = " << format_double(c.beam.r) << "\n"
        << "profile_variant = " << to_string(c.beam.profile_variant) << "\n\n"
        << "[reference]\n"
        << "num = " << format_list(c.reference.num) << "\n"
        << "den = " << format_list(c.reference.den) << "\n"
        << "dt = " << format_double(c.reference.dt) << "\n\n"
        << "[plant]\n"
        << "zeta = " << format_double(c.plant.zeta) << "\n"
        << "omega_n = " << format_double(c.plant.omega_n) << "\n\n"
        << "[mrac]\n"
        << "gamma = " << format_double(c.mrac.gamma) << "\n"
        << "duration = " << format_double(c.mrac.duration) << "\n"
        << "blowup_limit = " << format_double(c.mrac.blowup_limit) << "\n"
        << "feedback_gain = " << format_double(c.mrac.feedback_gain) << "\n"
        << "dither_amp = " << format_double(c.mrac.dither_amp) << "\n"
        << "dither_period = " << format_double(c.mrac.dither_period) << "\n\n"
        << "[nn]\n"
        << "layers = " << format_list(c.nn.layers) << "\n"
        << "seed = " << c.nn.seed << "\n"
        << "max_epochs = " << c.nn.max_epochs << "\n"
        << "lambda0 = " << format_double(c.nn.lambda0) << "\n"
        << "lambda_up = " << format_double(c.nn.lambda_up) << "\n"
        << "lambda_down = " << format_double(c.nn.lambda_down) << "\n"
        << "grad_tol = " << format_double(c.nn.grad_tol) << "\n"
        << "goal_sse = " << format_double(c.nn.goal_sse) << "\n"
        << "output_activation = " << to_string(c.nn.output_activation) << "\n\n"
        << "[train]\n"
        << "val_fraction = " << format_double(c.train.val_fraction) << "\n"
        << "stride = " << c.train.stride << "\n"
        << "washout = " << format_double(c.train.washout) << "\n\n"
        << "[loop]\n"
        << "direction = " << c.loop.direction << "\n"
        << "angle_deg = " << format_double(c.loop.angle_deg) << "\n"
        << "duration = " << format_double(c.loop.duration) << "\n"
        << "online = " << (c.loop.online ? "true" : "false") << "\n"
        << "eta = " << format_double(c.loop.eta) << "\n\n"
        << "[metrics]\n"
        << "band = " << format_double(c.metrics.band) << "\n"
        << "window = " << format_double(c.metrics.window) << "\n";
    return out.str();
}

std::string config_digest(const Config& config) {
    return fnv1a_hex(serialize_config(config));
}

BeamParams make_beam_params(const Config& config) {
    return BeamParams(config.beam.e, config.beam.i, config.beam.l, config.beam.k,
                      config.beam.a, config.beam.g, config.beam.r);
}

TransferFunction make_reference_tf(const Config& config) {
    return TransferFunction(config.reference.num, config.reference.den);
}

LTISystem make_reference_model(const Config& config) {
    return LTISystem(make_reference_tf(config), config.reference.dt);
}

PlantModel make_plant(const Config& config) {
    return PlantModel::from_beam(make_beam_params(config), config.plant.zeta,
                                 config.plant.omega_n, config.reference.dt);
}

}  // namespace wristsim
