#include "svg.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace frobtrace::cli {
namespace {

constexpr double kMarginLeft = 60;
constexpr double kMarginRight = 20;
constexpr double kMarginTop = 30;
constexpr double kMarginBottom = 40;
constexpr int kGridLines = 10;

}  // namespace

SvgPlot::SvgPlot(double x_lo, double x_hi, double y_lo, double y_hi, std::string title)
    : x_lo_(x_lo), x_hi_(x_hi), y_lo_(y_lo), y_hi_(y_hi), title_(std::move(title)) {}

double SvgPlot::px(double x) const {
  return kMarginLeft + (x - x_lo_) / (x_hi_ - x_lo_) * (kWidth - kMarginLeft - kMarginRight);
}

double SvgPlot::py(double y) const {
  const double clipped = std::clamp(y, y_lo_, y_hi_);
  return kHeight - kMarginBottom - (clipped - y_lo_) / (y_hi_ - y_lo_) * (kHeight - kMarginTop - kMarginBottom);
}

void SvgPlot::add_polyline(const std::vector<std::pair<double, double>>& points, const std::string& color) {
  std::string pts;
  for (const auto& [x, y] : points) {
    if (!std::isfinite(y)) continue;
    if (!pts.empty()) pts += ' ';
    pts += fmt::format("{:.3f},{:.3f}", px(x), py(y));
  }
  body_.push_back(fmt::format(R"(<polyline fill="none" stroke="{}" stroke-width="2" points="{}"/>)", color, pts));
}

void SvgPlot::add_bars(const std::vector<double>& edges, const std::vector<double>& heights,
                       const std::string& color) {
  for (std::size_t i = 0; i < heights.size() && i + 1 < edges.size(); ++i) {
    const double x0 = px(edges[i]);
    const double x1 = px(edges[i + 1]);
    const double top = py(heights[i]);
    const double base = py(y_lo_);
    body_.push_back(fmt::format(
        R"(<rect x="{:.3f}" y="{:.3f}" width="{:.3f}" height="{:.3f}" fill="{}" stroke="#ffffff" stroke-width="0.5"/>)",
        x0, top, x1 - x0, base - top, color));
  }
}

std::string SvgPlot::str() const {
  std::string out;
  out += R"(<?xml version="1.0" encoding="UTF-8" standalone="no"?>)" "\n";
  out += fmt::format(
      R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{1}" viewBox="0 0 {0} {1}">)"
      "\n",
      kWidth, kHeight);
  out += fmt::format(R"(<rect x="0" y="0" width="{}" height="{}" fill="#ffffff"/>)" "\n", kWidth, kHeight);
  for (int i = 0; i <= kGridLines; ++i) {
    const double fx = x_lo_ + (x_hi_ - x_lo_) * i / kGridLines;
    const double fy = y_lo_ + (y_hi_ - y_lo_) * i / kGridLines;
    out += fmt::format(R"(<line x1="{0:.3f}" y1="{1:.3f}" x2="{0:.3f}" y2="{2:.3f}" stroke="#e6e6e6" stroke-width="1"/>)" "\n",
                       px(fx), py(y_lo_), py(y_hi_));
    out += fmt::format(R"(<line x1="{0:.3f}" y1="{1:.3f}" x2="{2:.3f}" y2="{1:.3f}" stroke="#e6e6e6" stroke-width="1"/>)" "\n",
                       px(x_lo_), py(fy), px(x_hi_));
    out += fmt::format(R"(<text x="{:.3f}" y="{:.3f}" font-size="10" text-anchor="middle" fill="#555555">{:.3g}</text>)" "\n",
                       px(fx), kHeight - kMarginBottom + 14, fx);
    out += fmt::format(R"(<text x="{:.3f}" y="{:.3f}" font-size="10" text-anchor="end" fill="#555555">{:.3g}</text>)" "\n",
                       kMarginLeft - 6, py(fy) + 3, fy);
  }
  out += fmt::format(R"(<text x="{}" y="18" font-size="13" text-anchor="middle" fill="#222222">{}</text>)" "\n",
                     kWidth / 2, title_);
  for (const auto& line : body_) out += line + "\n";
  out += "</svg>\n";
  return out;
}

std::string histogram_svg(const equidist::Histogram& hist, const std::string& title,
                          const std::vector<std::pair<double, double>>& overlay) {
  std::vector<double> heights;
  double top = 0.0;
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    const double width = hist.bin_edges[i + 1] - hist.bin_edges[i];
    const double h = hist.total == 0 ? 0.0 : static_cast<double>(hist.counts[i]) / (static_cast<double>(hist.total) * width);
    heights.push_back(h);
    top = std::max(top, h);
  }
  for (const auto& pt : overlay) {
    if (std::isfinite(pt.second)) top = std::max(top, std::min(pt.second, 3.0));
  }
  if (top <= 0.0) top = 1.0;
  SvgPlot plot(hist.bin_edges.front(), hist.bin_edges.back(), 0.0, top * 1.1, title);
  plot.add_bars(hist.bin_edges, heights, "#9ecae1");
  if (!overlay.empty()) plot.add_polyline(overlay, "#08519c");
  return plot.str();
}

}  // namespace frobtrace::cli
