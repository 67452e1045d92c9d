#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pipeclimb {

/// One polyline series of an SVG line plot. NaN y-values break the line.
struct SvgSeries {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
};

/// Minimal standalone SVG line plot: axes, ticks, legend, no external
/// assets. Output is byte-deterministic for identical inputs.
std::string svg_line_plot(const std::string& title, const std::string& x_label,
                          const std::string& y_label,
                          const std::vector<SvgSeries>& series,
                          const std::optional<std::string>& annotation = std::nullopt);

}  // namespace pipeclimb
