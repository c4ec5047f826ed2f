#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frobtrace/equidist.hpp"

namespace frobtrace::cli {

/// Standalone SVG 1.1 plot, 900 x 360, with a light grid. Output depends only
/// on the data, so identical inputs give identical bytes.
class SvgPlot {
 public:
  static constexpr int kWidth = 900;
  static constexpr int kHeight = 360;

  SvgPlot(double x_lo, double x_hi, double y_lo, double y_hi, std::string title);

  /// One polyline; y values are clipped to the plot range.
  void add_polyline(const std::vector<std::pair<double, double>>& points, const std::string& color);
  /// One rect per bin, heights as given.
  void add_bars(const std::vector<double>& edges, const std::vector<double>& heights,
                const std::string& color);

  std::string str() const;

 private:
  double px(double x) const;
  double py(double y) const;

  double x_lo_, x_hi_, y_lo_, y_hi_;
  std::string title_;
  std::vector<std::string> body_;
};

/// Bars for `hist`, scaled to density (count / (total * width)), with an
/// optional curve overlay.
std::string histogram_svg(const equidist::Histogram& hist, const std::string& title,
                          const std::vector<std::pair<double, double>>& overlay = {});

}  // namespace frobtrace::cli
