#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "zzhg/io.hpp"
#include "zzhg/zigzag.hpp"

namespace zzhg {

namespace detail {

inline void svg_line(std::string& out, double x1, double y1, double x2, double y2,
                     const std::string& attrs) {
  out += "  <line x1=\"" + format_double(x1) + "\" y1=\"" + format_double(y1) +
         "\" x2=\"" + format_double(x2) + "\" y2=\"" + format_double(y2) + "\" " + attrs +
         "/>\n";
}

inline void svg_text(std::string& out, double x, double y, const std::string& text,
                     const std::string& attrs) {
  out += "  <text x=\"" + format_double(x) + "\" y=\"" + format_double(y) + "\" " + attrs +
         ">" + text + "</text>\n";
}

}  // namespace detail

/// Renders a barcode as an SVG 1.1 document: one horizontal band per
/// dimension, one bar per pair, open ends marked with an arrowhead.
inline std::string render_barcode(const Barcode& b) {
  constexpr double kWidth = 800.0;
  constexpr double kMarginLeft = 60.0;
  constexpr double kMarginRight = 30.0;
  constexpr double kMarginTop = 24.0;
  constexpr double kBarGap = 14.0;
  constexpr double kBandPad = 22.0;
  constexpr double kAxisSpace = 40.0;

  // Axis domain from the pairs and ticks.
  double lo = 0.0, hi = 1.0;
  bool seen = false;
  auto widen = [&](double v) {
    if (!seen) {
      lo = hi = v;
      seen = true;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  };
  for (const auto& [p, pairs] : b.dims)
    for (const BarcodeInterval& iv : pairs) {
      widen(iv.birth);
      widen(iv.death);
    }
  for (double t : b.ticks) widen(t);
  if (!seen) {
    lo = 0.0;
    hi = 1.0;
  } else if (hi == lo) {
    hi = lo + 1.0;
  }
  double span = hi - lo;
  lo -= 0.02 * span;
  hi += 0.02 * span;

  double plot_w = kWidth - kMarginLeft - kMarginRight;
  auto sx = [&](double v) { return kMarginLeft + (v - lo) / (hi - lo) * plot_w; };

  std::vector<double> ticks = b.ticks;
  if (ticks.empty()) {
    for (int i = 0; i <= 8; ++i) ticks.push_back(lo + (hi - lo) * i / 8.0);
  }

  std::string body;
  double y = kMarginTop;
  for (const auto& [p, pairs] : b.dims) {
    double band_top = y;
    y += kBandPad;
    detail::svg_text(body, 8.0, band_top + kBandPad, "D" + std::to_string(p),
                     "font-family=\"sans-serif\" font-size=\"13\"");
    for (const BarcodeInterval& iv : pairs) {
      double x1 = sx(iv.birth);
      double x2 = sx(iv.death);
      detail::svg_line(body, x1, y, x2, y,
                       "class=\"bar\" stroke=\"#1f6fb2\" stroke-width=\"4\" "
                       "stroke-linecap=\"round\"");
      if (iv.open_end) {
        // Arrowhead marking a class alive past the final complex.
        body += "  <path class=\"open-end\" d=\"M" + format_double(x2 + 2.0) + " " +
                format_double(y - 5.0) + " L" + format_double(x2 + 9.0) + " " +
                format_double(y) + " L" + format_double(x2 + 2.0) + " " +
                format_double(y + 5.0) + " Z\" fill=\"#b23a1f\"/>\n";
      }
      y += kBarGap;
    }
    if (pairs.empty()) y += kBarGap;
    body += "  <rect x=\"" + format_double(kMarginLeft) + "\" y=\"" +
            format_double(band_top + kBandPad / 2.0) + "\" width=\"" + format_double(plot_w) +
            "\" height=\"" + format_double(y - band_top - kBandPad / 2.0) +
            "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
    y += kBandPad / 2.0;
  }

  double axis_y = y + 8.0;
  detail::svg_line(body, kMarginLeft, axis_y, kMarginLeft + plot_w, axis_y,
                   "stroke=\"#333333\" stroke-width=\"1\"");
  for (double t : ticks) {
    double x = sx(t);
    detail::svg_line(body, x, axis_y, x, axis_y + 5.0, "stroke=\"#333333\" stroke-width=\"1\"");
    detail::svg_text(body, x, axis_y + 18.0, format_double(t),
                     "font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\"");
  }
  detail::svg_text(body, kMarginLeft + plot_w / 2.0, axis_y + 34.0,
                   b.axis == Axis::Index ? "index" : "time",
                   "font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\"");

  double height = axis_y + kAxisSpace;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         format_double(kWidth) + "\" height=\"" + format_double(height) + "\" viewBox=\"0 0 " +
         format_double(kWidth) + " " + format_double(height) + "\">\n";
  out += body;
  out += "</svg>\n";
  return out;
}

}  // namespace zzhg
