// Copyright 2026 The hexmatch authors
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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hexmatch/analysis.hpp"
#include "hexmatch/calibration.hpp"
#include "hexmatch/circuit.hpp"
#include "hexmatch/code.hpp"
#include "hexmatch/layout.hpp"
#include "hexmatch/noise.hpp"
#include "hexmatch/qasm.hpp"
#include "hexmatch/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitArgError = 2;
constexpr int kExitIoError = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_noise_list(const std::string &arg) {
    std::vector<double> ps;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        size_t pos = 0;
        double p = std::stod(item, &pos);
        if (pos != item.size()) {
            throw std::invalid_argument("bad noise value: " + item);
        }
        if (p < 0.0 || p > 1.0) {
            throw std::invalid_argument("noise values must be in [0, 1]");
        }
        ps.push_back(p);
    }
    if (ps.empty()) {
        throw std::invalid_argument("--noise needs at least one value");
    }
    return ps;
}

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    out << contents;
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

std::string format_p(double p) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", p);
    return buf;
}

int cmd_run(const std::string &layout_arg, int rounds, long long shots, const std::string &noise_arg,
            unsigned long long seed, const std::string &csv_path, const std::string &svg_path) {
    if (rounds < 1) {
        std::cerr << "error: rounds must be >= 1\n";
        return kExitArgError;
    }
    if (shots < 1) {
        std::cerr << "error: shots must be >= 1\n";
        return kExitArgError;
    }
    std::vector<double> ps;
    hexmatch::CodeSpec code;
    try {
        ps = parse_noise_list(noise_arg);
        code = hexmatch::build_code(hexmatch::resolve_layout(layout_arg));
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgError;
    }

    auto points = hexmatch::run_noise_sweep(code, rounds, static_cast<uint64_t>(shots), seed, ps);

    std::ostringstream csv;
    hexmatch::write_stats_csv_header(csv);
    for (const auto &pt : points) {
        hexmatch::write_stats_csv_row(csv, format_p(pt.p), pt.stats);
    }
    try {
        if (csv_path.empty() || csv_path == "-") {
            std::cout << csv.str();
        } else {
            write_file(csv_path, csv.str());
        }
        if (!svg_path.empty()) {
            write_file(svg_path, hexmatch::render_sweep_svg(points));
        }
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }
    return kExitOk;
}

int cmd_export(const std::string &layout_arg, int rounds, const std::string &qasm_path) {
    if (rounds < 1) {
        std::cerr << "error: rounds must be >= 1\n";
        return kExitArgError;
    }
    std::string text;
    try {
        auto code = hexmatch::build_code(hexmatch::resolve_layout(layout_arg));
        text = hexmatch::export_openqasm(hexmatch::build_experiment(code, rounds));
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgError;
    }
    try {
        if (qasm_path.empty() || qasm_path == "-") {
            std::cout << text;
        } else {
            write_file(qasm_path, text);
        }
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }
    return kExitOk;
}

int cmd_calib(const std::string &calib_path) {
    hexmatch::CalibrationData calib;
    try {
        calib = hexmatch::load_calibration_file(calib_path);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgError;
    }
    auto [mean, stddev] = hexmatch::calibration_stats(calib);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "device: %s\nmean_error: %.6f (%.4f%%)\nstddev_error: %.6f (%.4f%%)\n"
                  "quantum_volume: %lld\n",
                  calib.device.c_str(), mean, mean * 100.0, stddev, stddev * 100.0,
                  static_cast<long long>(calib.quantum_volume));
    std::cout << buf;
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Hexagonal matching codes on heavy-hex layouts: build the 2-body measurement "
                 "schedule, simulate it under bit-flip + depolarizing noise, and reduce shots to "
                 "the plaquette/z-link change frequencies."};
    app.require_subcommand(1);

    std::string layout = "falcon-27";
    int rounds = 3;
    long long shots = 8192;
    std::string noise = "0";
    unsigned long long seed = 0;
    std::string csv_path;
    std::string svg_path;
    std::string qasm_path;
    std::string calib_path;

    auto *run = app.add_subcommand("run", "Noise sweep: run shots and write stats CSV (+ optional SVG)");
    run->add_option("--layout", layout, "built-in name, hex-RxC, or layout JSON path");
    run->add_option("-T,--rounds", rounds, "measurement rounds");
    run->add_option("--shots", shots, "shots per noise point");
    run->add_option("--noise", noise, "comma-separated list of noise strengths p");
    run->add_option("--seed", seed, "random seed");
    run->add_option("--csv", csv_path, "stats CSV output path (default: stdout)");
    run->add_option("--svg", svg_path, "optional scatter plot output path");

    auto *exp = app.add_subcommand("export", "Export the ideal experiment circuit as OpenQASM 2.0");
    exp->add_option("--layout", layout, "built-in name, hex-RxC, or layout JSON path");
    exp->add_option("-T,--rounds", rounds, "measurement rounds");
    exp->add_option("--qasm", qasm_path, "output path (default: stdout)");

    auto *cal = app.add_subcommand("calib", "Combined error statistics from a calibration JSON file");
    cal->add_option("--calib", calib_path, "calibration JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitArgError;
    }

    if (run->parsed()) {
        return cmd_run(layout, rounds, shots, noise, seed, csv_path, svg_path);
    }
    if (exp->parsed()) {
        return cmd_export(layout, rounds, qasm_path);
    }
    if (cal->parsed()) {
        return cmd_calib(calib_path);
    }
    return kExitArgError;
}
