// Minimal SVG polyline plotter for curve output.
#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace svgplot {

using Series = std::vector<std::array<double, 2>>;

inline void write_polylines(const std::string& path,
                            const std::vector<Series>& series_list,
                            int width = 640, int height = 480) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin, ymin = xmin, ymax = -xmin;
  for (const Series& series : series_list) {
    for (const auto& pt : series) {
      xmin = std::min(xmin, pt[0]);
      xmax = std::max(xmax, pt[0]);
      ymin = std::min(ymin, pt[1]);
      ymax = std::max(ymax, pt[1]);
    }
  }
  if (!(xmin <= xmax) || !(ymin <= ymax)) {
    throw std::runtime_error("write_polylines: no finite points");
  }
  if (xmax - xmin < 1e-12) xmax = xmin + 1.0;
  if (ymax - ymin < 1e-12) ymax = ymin + 1.0;

  const double margin = 48.0;
  const double plot_w = width - 2.0 * margin;
  const double plot_h = height - 2.0 * margin;
  const auto px = [&](double x) {
    return margin + (x - xmin) / (xmax - xmin) * plot_w;
  };
  const auto py = [&](double y) {
    return height - margin - (y - ymin) / (ymax - ymin) * plot_h;
  };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_polylines: cannot open " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\""
      << plot_w << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << margin << "\" y=\"" << height - margin + 16
      << "\" font-size=\"11\" fill=\"#444\">" << xmin << "</text>\n";
  out << "<text x=\"" << width - margin << "\" y=\"" << height - margin + 16
      << "\" font-size=\"11\" fill=\"#444\" text-anchor=\"end\">" << xmax
      << "</text>\n";
  out << "<text x=\"" << margin - 6 << "\" y=\"" << height - margin
      << "\" font-size=\"11\" fill=\"#444\" text-anchor=\"end\">" << ymin
      << "</text>\n";
  out << "<text x=\"" << margin - 6 << "\" y=\"" << margin + 4
      << "\" font-size=\"11\" fill=\"#444\" text-anchor=\"end\">" << ymax
      << "</text>\n";

  const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                           "#ff7f0e"};
  for (size_t s = 0; s < series_list.size(); ++s) {
    out << "<polyline fill=\"none\" stroke=\"" << palette[s % 5]
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& pt : series_list[s]) {
      out << px(pt[0]) << "," << py(pt[1]) << " ";
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace svgplot
