#ifndef ETPA_SVG_HPP
#define ETPA_SVG_HPP

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "etpa/errors.hpp"

namespace etpa {

// Minimal self-contained SVG line-plot emitter: axes, ticks, legend, one
// polyline per curve. No styling beyond legibility.
class svg_plot {
 public:
  struct curve {
    std::vector<double> x, y;
    std::string label;
    std::string color;
  };

  svg_plot(std::string title, std::string xlabel, std::string ylabel)
      : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel)) {}

  void add_curve(std::vector<double> x, std::vector<double> y, std::string label) {
    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                    "#d62728", "#9467bd", "#8c564b"};
    curve c;
    c.x = std::move(x);
    c.y = std::move(y);
    c.label = std::move(label);
    c.color = palette[curves_.size() % 6];
    curves_.push_back(std::move(c));
  }

  void write(const std::string& path) const {
    if (curves_.empty()) throw error("svg_plot: no curves to draw");
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& c : curves_)
      for (std::size_t i = 0; i < c.x.size(); ++i) {
        xmin = std::min(xmin, c.x[i]);
        xmax = std::max(xmax, c.x[i]);
        ymin = std::min(ymin, c.y[i]);
        ymax = std::max(ymax, c.y[i]);
      }
    if (xmax <= xmin) xmax = xmin + 1.0;
    if (ymax <= ymin) ymax = ymin + 1.0;
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    const double w = 720, h = 480, ml = 70, mr = 20, mt = 40, mb = 55;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto py = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };

    std::ofstream out(path);
    if (!out) throw error("svg_plot: cannot open " + path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
        << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
        << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";

    out << "<text x=\"" << w / 2 << "\" y=\"22\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << title_ << "</text>\n";

    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr
        << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
        << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i) {
      const double xv = xmin + (xmax - xmin) * i / 5.0;
      const double yv = ymin + (ymax - ymin) * i / 5.0;
      out << "<line x1=\"" << px(xv) << "\" y1=\"" << h - mb << "\" x2=\"" << px(xv)
          << "\" y2=\"" << h - mb + 5 << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << px(xv) << "\" y=\"" << h - mb + 20
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
          << trim(xv) << "</text>\n";
      out << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << ml
          << "\" y2=\"" << py(yv) << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << ml - 8 << "\" y=\"" << py(yv) + 4
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
          << trim(yv) << "</text>\n";
    }

    out << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << xlabel_ << "</text>\n";
    out << "<text x=\"18\" y=\"" << (mt + h - mb) / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << (mt + h - mb) / 2 << ")\">" << ylabel_
        << "</text>\n";

    for (const auto& c : curves_) {
      out << "<polyline fill=\"none\" stroke=\"" << c.color
          << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < c.x.size(); ++i)
        out << px(c.x[i]) << "," << py(c.y[i]) << " ";
      out << "\"/>\n";
    }

    // legend, top right
    double ly = mt + 12;
    for (const auto& c : curves_) {
      out << "<line x1=\"" << w - mr - 150 << "\" y1=\"" << ly << "\" x2=\""
          << w - mr - 120 << "\" y2=\"" << ly << "\" stroke=\"" << c.color
          << "\" stroke-width=\"2\"/>\n"
          << "<text x=\"" << w - mr - 112 << "\" y=\"" << ly + 4
          << "\" font-family=\"sans-serif\" font-size=\"12\">" << c.label
          << "</text>\n";
      ly += 18;
    }

    out << "</svg>\n";
  }

 private:
  static std::string trim(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
  }

  std::string title_, xlabel_, ylabel_;
  std::vector<curve> curves_;
};

}  // namespace etpa

#endif
