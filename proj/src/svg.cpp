#include "pipeclimb/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pipeclimb {

namespace {

constexpr double kW = 640, kH = 420;
constexpr double kL = 70, kR = 150, kT = 40, kB = 50;  // margins

std::string f2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string g6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b"};

}  // namespace

std::string svg_line_plot(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<SvgSeries>& series,
                          const std::optional<std::string>& annotation) {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool any = false;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (!any) {
                xmin = xmax = s.x[i];
                ymin = ymax = s.y[i];
                any = true;
            } else {
                xmin = std::min(xmin, s.x[i]);
                xmax = std::max(xmax, s.x[i]);
                ymin = std::min(ymin, s.y[i]);
                ymax = std::max(ymax, s.y[i]);
            }
        }
    }
    if (xmax - xmin < 1e-12) xmax = xmin + 1;
    if (ymax - ymin < 1e-12) ymax = ymin + 1;

    auto px = [&](double x) { return kL + (x - xmin) / (xmax - xmin) * (kW - kL - kR); };
    auto py = [&](double y) { return kH - kB - (y - ymin) / (ymax - ymin) * (kH - kT - kB); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
        << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
    out << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\" "
           "font-family=\"sans-serif\">" << title << "</text>\n";
    // axes
    out << "<line x1=\"" << kL << "\" y1=\"" << kH - kB << "\" x2=\"" << kW - kR
        << "\" y2=\"" << kH - kB << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kL << "\" y1=\"" << kT << "\" x2=\"" << kL << "\" y2=\""
        << kH - kB << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 5.0;
        const double yv = ymin + (ymax - ymin) * i / 5.0;
        out << "<line x1=\"" << f2(px(xv)) << "\" y1=\"" << kH - kB << "\" x2=\""
            << f2(px(xv)) << "\" y2=\"" << kH - kB + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << f2(px(xv)) << "\" y=\"" << kH - kB + 18
            << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">"
            << g6(xv) << "</text>\n";
        out << "<line x1=\"" << kL - 5 << "\" y1=\"" << f2(py(yv)) << "\" x2=\"" << kL
            << "\" y2=\"" << f2(py(yv)) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << kL - 8 << "\" y=\"" << f2(py(yv) + 4)
            << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
            << g6(yv) << "</text>\n";
    }
    out << "<text x=\"" << (kL + kW - kR) / 2 << "\" y=\"" << kH - 12
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << x_label
        << "</text>\n";
    out << "<text x=\"18\" y=\"" << (kT + kH - kB) / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
           "transform=\"rotate(-90 18 " << (kT + kH - kB) / 2 << ")\">" << y_label
        << "</text>\n";

    int ci = 0;
    for (const auto& s : series) {
        const std::string color = s.color.empty() ? kPalette[ci % 6] : s.color;
        std::ostringstream pts;
        bool open = false;
        auto flush = [&]() {
            const std::string p = pts.str();
            if (open && !p.empty())
                out << "<polyline fill=\"none\" stroke=\"" << color
                    << "\" stroke-width=\"1.5\" points=\"" << p << "\"/>\n";
            pts.str("");
            open = false;
        };
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                flush();
                continue;
            }
            pts << f2(px(s.x[i])) << "," << f2(py(s.y[i])) << " ";
            open = true;
        }
        flush();
        const double ly = kT + 16 + 18 * ci;
        out << "<line x1=\"" << kW - kR + 12 << "\" y1=\"" << f2(ly - 4) << "\" x2=\""
            << kW - kR + 34 << "\" y2=\"" << f2(ly - 4) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << kW - kR + 40 << "\" y=\"" << f2(ly)
            << "\" font-size=\"12\" font-family=\"sans-serif\">" << s.label << "</text>\n";
        ++ci;
    }
    if (annotation) {
        out << "<text x=\"" << (kL + kW - kR) / 2 << "\" y=\"" << (kT + kH - kB) / 2
            << "\" text-anchor=\"middle\" font-size=\"14\" fill=\"#b00\" "
               "font-family=\"sans-serif\">" << *annotation << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace pipeclimb
