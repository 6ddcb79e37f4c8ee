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

#include "hexmatch/calibration.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hexmatch {

namespace {

void check_probability(double v, const char *what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must be in [0, 1]");
    }
}

}  // namespace

CalibrationData load_calibration_json(std::istream &in, const std::string &origin) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument("failed to parse calibration JSON from " + origin + ": " + e.what());
    }
    CalibrationData calib;
    try {
        calib.device = j.at("device").get<std::string>();
        calib.quantum_volume = j.at("quantum_volume").get<int64_t>();
        calib.t_id_ns = j.at("t_id_ns").get<double>();
        calib.t_meas_ns = j.at("t_meas_ns").get<double>();
        calib.t_reset_ns = j.at("t_reset_ns").get<double>();
        for (const auto &q : j.at("qubits")) {
            QubitCalibration qc;
            qc.index = q.at("index").get<uint32_t>();
            qc.prep_error = q.at("prep_error").get<double>();
            qc.meas_error = q.at("meas_error").get<double>();
            qc.id_error = q.at("id_error").get<double>();
            calib.qubits.push_back(qc);
        }
        for (const auto &c : j.at("cx")) {
            CxCalibration cc;
            cc.a = c.at("pair").at(0).get<uint32_t>();
            cc.b = c.at("pair").at(1).get<uint32_t>();
            cc.error = c.at("error").get<double>();
            calib.cx.push_back(cc);
        }
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument("calibration JSON from " + origin + " violates the schema: " +
                                    e.what());
    }
    if (calib.qubits.empty() || calib.cx.empty()) {
        throw std::invalid_argument("calibration JSON from " + origin + " has empty qubit or cx lists");
    }
    if (calib.t_id_ns <= 0.0 || calib.t_meas_ns <= 0.0 || calib.t_reset_ns <= 0.0) {
        throw std::invalid_argument("calibration timings must be positive");
    }
    for (const auto &q : calib.qubits) {
        check_probability(q.prep_error, "prep_error");
        check_probability(q.meas_error, "meas_error");
        check_probability(q.id_error, "id_error");
    }
    for (const auto &c : calib.cx) {
        check_probability(c.error, "cx error");
    }
    return calib;
}

CalibrationData load_calibration_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open calibration file: " + path);
    }
    return load_calibration_json(in, path);
}

double idle_error_probability(double p_id, double t_meas, double t_reset, double t_id) {
    if (!(p_id >= 0.0 && p_id <= 0.5)) {
        throw std::invalid_argument("idle error rate must be in [0, 0.5]");
    }
    if (t_id <= 0.0 || t_meas < 0.0 || t_reset < 0.0) {
        throw std::invalid_argument("idle error timings must be non-negative with t_id > 0");
    }
    return 1.0 - std::pow(1.0 - 2.0 * p_id, (t_meas + t_reset) / t_id);
}

std::pair<double, double> mean_and_stddev(const std::vector<double> &values) {
    if (values.empty()) {
        throw std::invalid_argument("cannot take statistics of an empty list");
    }
    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) {
        var += (v - mean) * (v - mean);
    }
    var /= static_cast<double>(values.size());
    return {mean, std::sqrt(var)};
}

std::pair<double, double> calibration_stats(const CalibrationData &calib) {
    if (calib.qubits.empty() || calib.cx.empty()) {
        throw std::invalid_argument("calibration lists must be non-empty");
    }
    std::vector<double> combined;
    combined.reserve(calib.qubits.size() * 3 + calib.cx.size());
    for (const auto &q : calib.qubits) {
        combined.push_back(q.prep_error);
    }
    for (const auto &q : calib.qubits) {
        combined.push_back(q.meas_error);
    }
    for (const auto &c : calib.cx) {
        combined.push_back(c.error);
    }
    for (const auto &q : calib.qubits) {
        combined.push_back(
            idle_error_probability(q.id_error, calib.t_meas_ns, calib.t_reset_ns, calib.t_id_ns));
    }
    return mean_and_stddev(combined);
}

}  // namespace hexmatch
