#include "mcs/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mcs/csv.hpp"

namespace mcs {

namespace {

constexpr int margin = 56;

double transform_x(double x, bool log_x) { return log_x ? std::log10(x) : x; }

}  // namespace

std::string scatter_svg(const std::vector<double>& xs, const std::vector<double>& ys,
                        const PlotOptions& opt) {
    if (xs.empty() || xs.size() != ys.size())
        throw std::invalid_argument("scatter_svg: need equal, nonempty x/y vectors");
    if (opt.log_x)
        for (double x : xs)
            if (!(x > 0.0))
                throw std::invalid_argument("scatter_svg: log x-axis requires positive x");

    std::vector<double> tx(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) tx[i] = transform_x(xs[i], opt.log_x);
    auto [xmin_it, xmax_it] = std::minmax_element(tx.begin(), tx.end());
    auto [ymin_it, ymax_it] = std::minmax_element(ys.begin(), ys.end());
    double xmin = *xmin_it, xmax = *xmax_it, ymin = *ymin_it, ymax = *ymax_it;
    if (xmax == xmin) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax == ymin) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double pad_x = 0.04 * (xmax - xmin), pad_y = 0.06 * (ymax - ymin);
    xmin -= pad_x;
    xmax += pad_x;
    ymin -= pad_y;
    ymax += pad_y;

    const double w = opt.width - 2.0 * margin;
    const double h = opt.height - 2.0 * margin;
    auto px = [&](double x) { return margin + (transform_x(x, opt.log_x) - xmin) / (xmax - xmin) * w; };
    auto py = [&](double y) { return opt.height - margin - (y - ymin) / (ymax - ymin) * h; };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width
      << "\" height=\"" << opt.height << "\" viewBox=\"0 0 " << opt.width << " "
      << opt.height << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << w
      << "\" height=\"" << h << "\" fill=\"none\" stroke=\"#444\"/>\n";

    // axis ticks
    for (int i = 0; i <= 4; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 4.0;
        const double fy = ymin + (ymax - ymin) * i / 4.0;
        const double gx = margin + w * i / 4.0;
        const double gy = opt.height - margin - h * i / 4.0;
        const double label_x = opt.log_x ? std::pow(10.0, fx) : fx;
        s << "<line x1=\"" << gx << "\" y1=\"" << opt.height - margin << "\" x2=\"" << gx
          << "\" y2=\"" << opt.height - margin + 5 << "\" stroke=\"#444\"/>\n";
        s << "<text x=\"" << gx << "\" y=\"" << opt.height - margin + 18
          << "\" font-size=\"11\" text-anchor=\"middle\">" << format_g9(label_x)
          << "</text>\n";
        s << "<line x1=\"" << margin - 5 << "\" y1=\"" << gy << "\" x2=\"" << margin
          << "\" y2=\"" << gy << "\" stroke=\"#444\"/>\n";
        s << "<text x=\"" << margin - 8 << "\" y=\"" << gy + 4
          << "\" font-size=\"11\" text-anchor=\"end\">" << format_g9(fy) << "</text>\n";
    }
    s << "<text x=\"" << opt.width / 2 << "\" y=\"" << opt.height - 12
      << "\" font-size=\"13\" text-anchor=\"middle\">" << opt.xlabel
      << (opt.log_x ? " (log scale)" : "") << "</text>\n";
    s << "<text x=\"16\" y=\"" << opt.height / 2
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << opt.height / 2 << ")\">" << opt.ylabel << "</text>\n";

    if (opt.connect) {
        s << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < xs.size(); ++i)
            s << px(xs[i]) << "," << py(ys[i]) << " ";
        s << "\"/>\n";
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
        s << "<circle cx=\"" << px(xs[i]) << "\" cy=\"" << py(ys[i])
          << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
    s << "</svg>\n";
    return s.str();
}

void write_scatter_svg(const std::string& path, const std::vector<double>& xs,
                       const std::vector<double>& ys, const PlotOptions& opt) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_scatter_svg: cannot open " + path);
    f << scatter_svg(xs, ys, opt);
}

}  // namespace mcs
