// Copyright 2026 The betasurv Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "betasurv/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace betasurv {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kMargin = 60;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '&':
            out += "&amp;";
            break;
        default:
            out.push_back(c);
        }
    }
    return out;
}

} // namespace

std::string render_svg(std::span<const PlotPoint> points, std::string_view title) {
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << escape(title) << "</text>\n";

    if (points.empty()) {
        svg << "</svg>\n";
        return svg.str();
    }

    auto [pmin_it, pmax_it] = std::minmax_element(
        points.begin(), points.end(), [](const auto& a, const auto& b) { return a.p < b.p; });
    auto [vmin_it, vmax_it] = std::minmax_element(
        points.begin(), points.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
    const double x0 = static_cast<double>(pmin_it->p);
    double x1 = static_cast<double>(pmax_it->p);
    const double y0 = vmin_it->value;
    double y1 = vmax_it->value;
    if (x1 == x0) {
        x1 = x0 + 1;
    }
    if (y1 == y0) {
        y1 = y0 + 1;
    }

    const double plot_w = kWidth - 2 * kMargin;
    const double plot_h = kHeight - 2 * kMargin;
    auto sx = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * plot_w; };
    auto sy = [&](double y) { return kHeight - kMargin - (y - y0) / (y1 - y0) * plot_h; };

    // Axes.
    svg << "<line x1=\"" << fmt(kMargin) << "\" y1=\"" << fmt(kHeight - kMargin) << "\" x2=\""
        << fmt(kWidth - kMargin) << "\" y2=\"" << fmt(kHeight - kMargin)
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << fmt(kMargin) << "\" y1=\"" << fmt(kMargin) << "\" x2=\"" << fmt(kMargin)
        << "\" y2=\"" << fmt(kHeight - kMargin) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kHeight - kMargin + 18)
        << "\" text-anchor=\"middle\" font-size=\"12\">" << pmin_it->p << "</text>\n";
    svg << "<text x=\"" << fmt(kWidth - kMargin) << "\" y=\"" << fmt(kHeight - kMargin + 18)
        << "\" text-anchor=\"middle\" font-size=\"12\">" << pmax_it->p << "</text>\n";
    svg << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"" << fmt(kHeight - 16)
        << "\" text-anchor=\"middle\" font-size=\"13\">p</text>\n";
    svg << "<text x=\"" << fmt(kMargin - 6) << "\" y=\"" << fmt(kHeight - kMargin)
        << "\" text-anchor=\"end\" font-size=\"12\">" << fmt_value(y0) << "</text>\n";
    svg << "<text x=\"" << fmt(kMargin - 6) << "\" y=\"" << fmt(kMargin + 4)
        << "\" text-anchor=\"end\" font-size=\"12\">" << fmt_value(y1) << "</text>\n";
    svg << "<text x=\"16\" y=\"" << fmt(kHeight / 2)
        << "\" font-size=\"13\" transform=\"rotate(-90 16 " << fmt(kHeight / 2)
        << ")\" text-anchor=\"middle\">S(p)</text>\n";

    svg << "<polyline fill=\"none\" stroke=\"steelblue\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        svg << (i ? " " : "") << fmt(sx(static_cast<double>(points[i].p))) << ','
            << fmt(sy(points[i].value));
    }
    svg << "\"/>\n";
    for (const auto& pt : points) {
        svg << "<circle cx=\"" << fmt(sx(static_cast<double>(pt.p))) << "\" cy=\""
            << fmt(sy(pt.value)) << "\" r=\"3\" fill=\"steelblue\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace betasurv
