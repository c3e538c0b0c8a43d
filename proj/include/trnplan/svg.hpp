#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace trnplan {

struct SvgSeries {
    std::string name;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

// Static line chart with axes, integer x ticks and a legend. Deterministic
// output: same input, same bytes.
inline std::string svg_line_chart(const std::string& title, const std::string& x_label,
                                  const std::string& y_label,
                                  const std::vector<SvgSeries>& series) {
    constexpr double width = 640.0, height = 420.0;
    constexpr double left = 64.0, right = 24.0, top = 48.0, bottom = 56.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool first = true;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            if (first) {
                x_min = x_max = x;
                y_min = y_max = y;
                first = false;
            }
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    y_min = std::min(y_min, 0.0);
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;
    y_max *= 1.05;

    auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return top + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" "
           "viewBox=\"0 0 640 420\">\n";
    svg += "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";
    svg += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">" + title + "</text>\n";

    // axes
    svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) +
           "\" y2=\"" + num(top + plot_h) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(top + plot_h) + "\" x2=\"" +
           num(left + plot_w) + "\" y2=\"" + num(top + plot_h) + "\" stroke=\"black\"/>\n";

    // x ticks on integers (thinned when dense)
    const int x_lo = static_cast<int>(std::ceil(x_min));
    const int x_hi = static_cast<int>(std::floor(x_max));
    const int x_step = std::max(1, (x_hi - x_lo) / 16 + ((x_hi - x_lo) % 16 ? 1 : 0));
    for (int x = x_lo; x <= x_hi; x += x_step) {
        const double gx = px(x);
        svg += "<line x1=\"" + num(gx) + "\" y1=\"" + num(top + plot_h) + "\" x2=\"" + num(gx) +
               "\" y2=\"" + num(top + plot_h + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(gx) + "\" y=\"" + num(top + plot_h + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               std::to_string(x) + "</text>\n";
    }

    // y ticks, 5 divisions
    for (int i = 0; i <= 5; ++i) {
        const double y = y_min + (y_max - y_min) * i / 5.0;
        const double gy = py(y);
        svg += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(gy) + "\" x2=\"" + num(left) +
               "\" y2=\"" + num(gy) + "\" stroke=\"black\"/>\n";
        svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(gy) + "\" x2=\"" +
               num(left + plot_w) + "\" y2=\"" + num(gy) +
               "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
        svg += "<text x=\"" + num(left - 9) + "\" y=\"" + num(gy + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(y) +
               "</text>\n";
    }

    svg += "<text x=\"" + num(left + plot_w / 2) + "\" y=\"" + num(height - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + x_label +
           "</text>\n";
    svg += "<text x=\"16\" y=\"" + num(top + plot_h / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 16 " + num(top + plot_h / 2) + ")\">" + y_label +
           "</text>\n";

    for (const auto& s : series) {
        std::string pts;
        for (const auto& [x, y] : s.points) {
            if (!pts.empty()) pts += ' ';
            pts += num(px(x)) + "," + num(py(y));
        }
        svg += "<polyline fill=\"none\" stroke=\"" + s.color +
               "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
        for (const auto& [x, y] : s.points) {
            svg += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) +
                   "\" r=\"2.5\" fill=\"" + s.color + "\"/>\n";
        }
    }

    // legend, top-left corner of the plot area
    double ly = top + 14.0;
    for (const auto& s : series) {
        svg += "<line x1=\"" + num(left + 12) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
               num(left + 36) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + s.color +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + num(left + 42) + "\" y=\"" + num(ly) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + s.name + "</text>\n";
        ly += 18.0;
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace trnplan
