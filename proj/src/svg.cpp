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

#include "hexmatch/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hexmatch {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 480;
constexpr double kMarginLeft = 70;
constexpr double kMarginRight = 20;
constexpr double kMarginTop = 20;
constexpr double kMarginBottom = 55;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

std::string render_sweep_svg(const std::vector<SweepPoint> &points) {
    double max_p = 0.0;
    for (const auto &pt : points) {
        max_p = std::max(max_p, pt.p);
    }
    if (max_p <= 0.0) {
        max_p = 1.0;
    }
    double max_y = 0.55;

    double plot_w = kWidth - kMarginLeft - kMarginRight;
    double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto px = [&](double p) { return kMarginLeft + plot_w * (p / (max_p * 1.05)); };
    auto py = [&](double v) { return kMarginTop + plot_h * (1.0 - v / max_y); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    out << "<line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(py(0)) << "\" x2=\""
        << fmt(kWidth - kMarginRight) << "\" y2=\"" << fmt(py(0)) << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(py(0)) << "\" x2=\""
        << fmt(kMarginLeft) << "\" y2=\"" << fmt(kMarginTop) << "\" stroke=\"black\"/>\n";

    // y ticks every 0.1, plus the 0.5 convergence guide
    for (double v = 0.0; v <= max_y + 1e-9; v += 0.1) {
        out << "<line x1=\"" << fmt(kMarginLeft - 4) << "\" y1=\"" << fmt(py(v)) << "\" x2=\""
            << fmt(kMarginLeft) << "\" y2=\"" << fmt(py(v)) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << fmt(kMarginLeft - 8) << "\" y=\"" << fmt(py(v) + 4)
            << "\" font-size=\"12\" text-anchor=\"end\">" << fmt_tick(v) << "</text>\n";
    }
    out << "<line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(py(0.5)) << "\" x2=\""
        << fmt(kWidth - kMarginRight) << "\" y2=\"" << fmt(py(0.5))
        << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";

    // x ticks at each sweep point
    for (const auto &pt : points) {
        out << "<line x1=\"" << fmt(px(pt.p)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(px(pt.p))
            << "\" y2=\"" << fmt(py(0) + 4) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << fmt(px(pt.p)) << "\" y=\"" << fmt(py(0) + 18)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt_tick(pt.p) << "</text>\n";
    }
    out << "<text x=\"" << fmt(kMarginLeft + plot_w / 2) << "\" y=\"" << fmt(kHeight - 12)
        << "\" font-size=\"14\" text-anchor=\"middle\">noise strength p</text>\n";
    out << "<text x=\"16\" y=\"" << fmt(kMarginTop + plot_h / 2)
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << fmt(kMarginTop + plot_h / 2) << ")\">change frequency</text>\n";

    // p_W as x markers, p_Z as + markers
    const double m = 5;
    for (const auto &pt : points) {
        double cx = px(pt.p);
        double cy = py(pt.stats.mean_pW);
        out << "<line x1=\"" << fmt(cx - m) << "\" y1=\"" << fmt(cy - m) << "\" x2=\"" << fmt(cx + m)
            << "\" y2=\"" << fmt(cy + m) << "\" stroke=\"#c62828\" stroke-width=\"1.5\"/>\n";
        out << "<line x1=\"" << fmt(cx - m) << "\" y1=\"" << fmt(cy + m) << "\" x2=\"" << fmt(cx + m)
            << "\" y2=\"" << fmt(cy - m) << "\" stroke=\"#c62828\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto &pt : points) {
        double cx = px(pt.p);
        double cy = py(pt.stats.mean_pZ);
        out << "<line x1=\"" << fmt(cx - m) << "\" y1=\"" << fmt(cy) << "\" x2=\"" << fmt(cx + m)
            << "\" y2=\"" << fmt(cy) << "\" stroke=\"#1565c0\" stroke-width=\"1.5\"/>\n";
        out << "<line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(cy - m) << "\" x2=\"" << fmt(cx)
            << "\" y2=\"" << fmt(cy + m) << "\" stroke=\"#1565c0\" stroke-width=\"1.5\"/>\n";
    }

    // legend
    out << "<text x=\"" << fmt(kMarginLeft + 14) << "\" y=\"" << fmt(kMarginTop + 16)
        << "\" font-size=\"13\" fill=\"#c62828\">x  mean p_W</text>\n";
    out << "<text x=\"" << fmt(kMarginLeft + 14) << "\" y=\"" << fmt(kMarginTop + 34)
        << "\" font-size=\"13\" fill=\"#1565c0\">+  mean p_Z</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace hexmatch
