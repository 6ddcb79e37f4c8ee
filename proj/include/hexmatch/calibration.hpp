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

#ifndef HEXMATCH_CALIBRATION_HPP
#define HEXMATCH_CALIBRATION_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hexmatch {

struct QubitCalibration {
    uint32_t index = 0;
    double prep_error = 0.0;  // prob_meas1_prep0
    double meas_error = 0.0;
    double id_error = 0.0;  // identity-gate error over t_id
};

struct CxCalibration {
    uint32_t a = 0;
    uint32_t b = 0;
    double error = 0.0;
};

struct CalibrationData {
    std::string device;
    int64_t quantum_volume = 0;  // opaque metadata
    double t_id_ns = 0.0;
    double t_meas_ns = 0.0;
    double t_reset_ns = 0.0;
    std::vector<QubitCalibration> qubits;
    std::vector<CxCalibration> cx;
};

CalibrationData load_calibration_json(std::istream &in, const std::string &origin);
CalibrationData load_calibration_file(const std::string &path);

/// Probability of an odd number of identity-gate errors over the measure +
/// reset timescale: 1 - (1 - 2 p_id)^((t_meas + t_reset) / t_id).
double idle_error_probability(double p_id, double t_meas, double t_reset, double t_id);

/// Mean and population standard deviation of a list.
std::pair<double, double> mean_and_stddev(const std::vector<double> &values);

/// Combines prep, measurement, CX, and per-qubit idle probabilities into one
/// list and returns its mean and population standard deviation.
std::pair<double, double> calibration_stats(const CalibrationData &calib);

}  // namespace hexmatch

#endif
