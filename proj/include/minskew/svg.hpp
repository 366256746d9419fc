// SPDX-License-Identifier: Apache-2.0
//
// Minimal self-contained SVG 1.1 line/scatter chart: analytic values as a
// polyline, numeric values as cross markers.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace minskew {

struct PlotSeriesPoint {
    double x = 0.0;
    std::optional<double> analytic;
    double numeric = 0.0;
};

namespace detail {

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

}  // namespace detail

inline std::string render_svg_chart(const std::vector<PlotSeriesPoint>& points,
                                    const std::string& title, const std::string& x_label) {
    const double width = 840, height = 560;
    const double ml = 70, mr = 25, mt = 45, mb = 55;

    double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
    if (!points.empty()) {
        x_min = x_max = points.front().x;
        y_min = 0.0;
        y_max = points.front().numeric;
        for (const auto& p : points) {
            x_min = std::min(x_min, p.x);
            x_max = std::max(x_max, p.x);
            y_max = std::max(y_max, p.numeric);
            y_min = std::min(y_min, p.numeric);
            if (p.analytic) {
                y_max = std::max(y_max, *p.analytic);
                y_min = std::min(y_min, *p.analytic);
            }
        }
    }
    if (x_max == x_min) x_max = x_min + 1.0;
    const double pad = (y_max - y_min) * 0.05;
    y_max += pad > 0 ? pad : 0.05;
    y_min -= pad > 0 ? pad : 0.05;

    const auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * (width - ml - mr); };
    const auto py = [&](double y) {
        return height - mb - (y - y_min) / (y_max - y_min) * (height - mt - mb);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           detail::svg_num(width) + "\" height=\"" + detail::svg_num(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + detail::svg_num(width / 2) + "\" y=\"25\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" + title + "</text>\n";

    // axes
    svg += "<line x1=\"" + detail::svg_num(ml) + "\" y1=\"" + detail::svg_num(height - mb) +
           "\" x2=\"" + detail::svg_num(width - mr) + "\" y2=\"" + detail::svg_num(height - mb) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + detail::svg_num(ml) + "\" y1=\"" + detail::svg_num(mt) + "\" x2=\"" +
           detail::svg_num(ml) + "\" y2=\"" + detail::svg_num(height - mb) +
           "\" stroke=\"black\"/>\n";

    for (int t = 0; t <= 5; ++t) {
        const double xv = x_min + (x_max - x_min) * t / 5.0;
        const double yv = y_min + (y_max - y_min) * t / 5.0;
        svg += "<line x1=\"" + detail::svg_num(px(xv)) + "\" y1=\"" + detail::svg_num(height - mb) +
               "\" x2=\"" + detail::svg_num(px(xv)) + "\" y2=\"" +
               detail::svg_num(height - mb + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + detail::svg_num(px(xv)) + "\" y=\"" +
               detail::svg_num(height - mb + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               detail::tick_label(xv) + "</text>\n";
        svg += "<line x1=\"" + detail::svg_num(ml - 5) + "\" y1=\"" + detail::svg_num(py(yv)) +
               "\" x2=\"" + detail::svg_num(ml) + "\" y2=\"" + detail::svg_num(py(yv)) +
               "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + detail::svg_num(ml - 9) + "\" y=\"" + detail::svg_num(py(yv) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               detail::tick_label(yv) + "</text>\n";
    }
    svg += "<text x=\"" + detail::svg_num((ml + width - mr) / 2) + "\" y=\"" +
           detail::svg_num(height - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + x_label +
           "</text>\n";

    std::string polyline;
    for (const auto& p : points)
        if (p.analytic)
            polyline += detail::svg_num(px(p.x)) + "," + detail::svg_num(py(*p.analytic)) + " ";
    if (!polyline.empty())
        svg += "<polyline points=\"" + polyline +
               "\" fill=\"none\" stroke=\"#2060c0\" stroke-width=\"1.5\"/>\n";

    for (const auto& p : points) {
        const double cx = px(p.x), cy = py(p.numeric);
        svg += "<path d=\"M" + detail::svg_num(cx - 4) + " " + detail::svg_num(cy) + "H" +
               detail::svg_num(cx + 4) + "M" + detail::svg_num(cx) + " " +
               detail::svg_num(cy - 4) + "V" + detail::svg_num(cy + 4) +
               "\" stroke=\"#c03020\" stroke-width=\"1.5\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace minskew
