// Copyright 2026 The dmpst Authors.
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

#include "dmpst/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace dmpst::svg {

namespace {

const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

std::string line_chart(const std::vector<Series> &series,
                       const ChartOptions &opt) {
    const double left = 70, right = 20, top = 40, bottom = 50;
    const double plot_w = opt.width - left - right;
    const double plot_h = opt.height - top - bottom;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    auto tx = [&](double x) { return opt.log_x ? std::log10(x) : x; };
    auto ty = [&](double y) { return opt.log_y ? std::log10(y) : y; };
    for (const Series &s : series) {
        for (double x : s.xs) {
            xmin = std::min(xmin, tx(x));
            xmax = std::max(xmax, tx(x));
        }
        for (double y : s.ys) {
            ymin = std::min(ymin, ty(y));
            ymax = std::max(ymax, ty(y));
        }
    }
    if (!(xmax > xmin)) {
        xmax = xmin + 1;
    }
    if (!(ymax > ymin)) {
        ymax = ymin + 1;
    }
    const double xpad = 0.05 * (xmax - xmin), ypad = 0.08 * (ymax - ymin);
    xmin -= xpad;
    xmax += xpad;
    ymin -= ypad;
    ymax += ypad;

    auto px = [&](double x) {
        return left + (tx(x) - xmin) / (xmax - xmin) * plot_w;
    };
    auto py = [&](double y) {
        return top + plot_h - (ty(y) - ymin) / (ymax - ymin) * plot_h;
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width
        << "\" height=\"" << opt.height << "\" font-family=\"sans-serif\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << opt.width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
        << "font-size=\"15\">" << opt.title << "</text>\n";

    // Frame and ticks.
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#444\"/>\n";
    const int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double fx = xmin + (xmax - xmin) * i / ticks;
        const double fy = ymin + (ymax - ymin) * i / ticks;
        const double gx = left + plot_w * i / ticks;
        const double gy = top + plot_h - plot_h * i / ticks;
        const double label_x = opt.log_x ? std::pow(10.0, fx) : fx;
        const double label_y = opt.log_y ? std::pow(10.0, fy) : fy;
        out << "<line x1=\"" << gx << "\" y1=\"" << top + plot_h << "\" x2=\""
            << gx << "\" y2=\"" << top + plot_h + 5 << "\" stroke=\"#444\"/>\n";
        out << "<text x=\"" << gx << "\" y=\"" << top + plot_h + 18
            << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(label_x)
            << "</text>\n";
        out << "<line x1=\"" << left - 5 << "\" y1=\"" << gy << "\" x2=\"" << left
            << "\" y2=\"" << gy << "\" stroke=\"#444\"/>\n";
        out << "<text x=\"" << left - 8 << "\" y=\"" << gy + 4
            << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(label_y)
            << "</text>\n";
    }
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << opt.height - 10
        << "\" text-anchor=\"middle\" font-size=\"12\">" << opt.x_label
        << "</text>\n";
    out << "<text x=\"16\" y=\"" << top + plot_h / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
        << top + plot_h / 2 << ")\">" << opt.y_label << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char *color = kPalette[s % (sizeof(kPalette) / sizeof(*kPalette))];
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.8\" points=\"";
        for (std::size_t i = 0; i < series[s].xs.size(); ++i) {
            out << fmt(px(series[s].xs[i])) << "," << fmt(py(series[s].ys[i]))
                << " ";
        }
        out << "\"/>\n";
        for (std::size_t i = 0; i < series[s].xs.size(); ++i) {
            out << "<circle cx=\"" << fmt(px(series[s].xs[i])) << "\" cy=\""
                << fmt(py(series[s].ys[i])) << "\" r=\"2.5\" fill=\"" << color
                << "\"/>\n";
        }
        out << "<text x=\"" << left + 10 << "\" y=\"" << top + 16 + 15 * s
            << "\" font-size=\"12\" fill=\"" << color << "\">" << series[s].label
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace dmpst::svg
