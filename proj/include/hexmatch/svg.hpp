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

#ifndef HEXMATCH_SVG_HPP
#define HEXMATCH_SVG_HPP

#include <string>
#include <vector>

#include "hexmatch/analysis.hpp"

namespace hexmatch {

/// Scatter plot of mean_pW (x markers) and mean_pZ (+ markers) against noise
/// strength. Hand-written markup, no dependencies.
std::string render_sweep_svg(const std::vector<SweepPoint> &points);

}  // namespace hexmatch

#endif
