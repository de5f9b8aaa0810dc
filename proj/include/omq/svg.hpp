#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "omq/csv.hpp"

namespace omq {

/// Minimal line-plot SVG writer for quick visual inspection of CSV outputs.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string xlabel, std::string ylabel, bool log_x = false)
      : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel)),
        log_x_(log_x) {}

  void add_series(const std::string& name, const std::vector<double>& x,
                  const std::vector<double>& y) {
    series_.push_back({name, x, y});
  }

  std::string str() const {
    const double w = 760, h = 480, ml = 70, mr = 20, mt = 40, mb = 50;
    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const auto& s : series_) {
      for (double v : s.x) {
        const double t = log_x_ ? std::log10(v) : v;
        x_lo = std::min(x_lo, t);
        x_hi = std::max(x_hi, t);
      }
      for (double v : s.y) {
        y_lo = std::min(y_lo, v);
        y_hi = std::max(y_hi, v);
      }
    }
    if (!(x_hi > x_lo)) x_hi = x_lo + 1.0;
    if (!(y_hi > y_lo)) y_hi = y_lo + 1.0;
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    auto px = [&](double v) {
      const double t = log_x_ ? std::log10(v) : v;
      return ml + (t - x_lo) / (x_hi - x_lo) * (w - ml - mr);
    };
    auto py = [&](double v) { return h - mb - (v - y_lo) / (y_hi - y_lo) * (h - mt - mb); };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"760\" height=\"480\" "
           "viewBox=\"0 0 760 480\">\n";
    out += "<rect width=\"760\" height=\"480\" fill=\"white\"/>\n";
    out += "<text x=\"380\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" + title_ +
           "</text>\n";
    out += "<text x=\"380\" y=\"470\" text-anchor=\"middle\" font-size=\"13\">" + xlabel_ +
           "</text>\n";
    out += "<text x=\"16\" y=\"240\" text-anchor=\"middle\" font-size=\"13\" "
           "transform=\"rotate(-90 16 240)\">" + ylabel_ + "</text>\n";
    out += "<rect x=\"" + format_double(ml) + "\" y=\"" + format_double(mt) + "\" width=\"" +
           format_double(w - ml - mr) + "\" height=\"" + format_double(h - mt - mb) +
           "\" fill=\"none\" stroke=\"#444\"/>\n";
    // axis ticks
    for (int i = 0; i <= 4; ++i) {
      const double fx = x_lo + (x_hi - x_lo) * i / 4.0;
      const double vx = log_x_ ? std::pow(10.0, fx) : fx;
      const double gx = ml + (w - ml - mr) * i / 4.0;
      out += "<line x1=\"" + format_double(gx) + "\" y1=\"" + format_double(h - mb) +
             "\" x2=\"" + format_double(gx) + "\" y2=\"" + format_double(h - mb + 5) +
             "\" stroke=\"#444\"/>\n";
      out += "<text x=\"" + format_double(gx) + "\" y=\"" + format_double(h - mb + 18) +
             "\" text-anchor=\"middle\" font-size=\"11\">" + short_num(vx) + "</text>\n";
      const double vy = y_lo + (y_hi - y_lo) * i / 4.0;
      const double gy = py(vy);
      out += "<line x1=\"" + format_double(ml - 5) + "\" y1=\"" + format_double(gy) +
             "\" x2=\"" + format_double(ml) + "\" y2=\"" + format_double(gy) +
             "\" stroke=\"#444\"/>\n";
      out += "<text x=\"" + format_double(ml - 8) + "\" y=\"" + format_double(gy + 4) +
             "\" text-anchor=\"end\" font-size=\"11\">" + short_num(vy) + "</text>\n";
    }
    int ci = 0;
    double legend_y = mt + 14;
    for (const auto& s : series_) {
      const char* color = palette[ci++ % 5];
      std::string pts;
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        pts += format_double(px(s.x[i])) + "," + format_double(py(s.y[i])) + " ";
      }
      out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.5\"/>\n";
      if (series_.size() > 1) {
        out += "<text x=\"" + format_double(w - mr - 8) + "\" y=\"" + format_double(legend_y) +
               "\" text-anchor=\"end\" font-size=\"12\" fill=\"" + color + "\">" + s.name +
               "</text>\n";
        legend_y += 16;
      }
    }
    out += "</svg>\n";
    return out;
  }

 private:
  static std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
  }

  struct Series {
    std::string name;
    std::vector<double> x, y;
  };
  std::string title_, xlabel_, ylabel_;
  bool log_x_;
  std::vector<Series> series_;
};

}  // namespace omq
