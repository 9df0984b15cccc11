#pragma once

#include <string>
#include <vector>

namespace mcs {

struct PlotOptions {
    std::string xlabel = "x";
    std::string ylabel = "y";
    bool log_x = false;
    bool connect = false;  // also draw a polyline through the points
    int width = 720;
    int height = 480;
};

// Self-contained static SVG scatter plot.
std::string scatter_svg(const std::vector<double>& xs, const std::vector<double>& ys,
                        const PlotOptions& opt);

void write_scatter_svg(const std::string& path, const std::vector<double>& xs,
                       const std::vector<double>& ys, const PlotOptions& opt);

}  // namespace mcs
