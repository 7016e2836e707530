/*
 * Copyright (c) 2026 The qpc Authors. All Rights Reserved
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace qpc::cli
{

namespace
{

constexpr double kWidth = 960.0;
constexpr double kHeight = 540.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

std::string fmt(double v, int decimals = 2)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string escape(const std::string &s)
{
  std::string out;
  for (char c : s)
  {
    switch (c)
    {
    case '&':
      out += "&amp;";
      break;
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    default:
      out += c;
    }
  }
  return out;
}

// 1, 2 or 5 times a power of ten, giving roughly `target` intervals.
double nice_step(double span, int target)
{
  const double raw = span / target;
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  const double residual = raw / magnitude;
  if (residual < 1.5)
    return magnitude;
  if (residual < 3.5)
    return 2.0 * magnitude;
  if (residual < 7.5)
    return 5.0 * magnitude;
  return 10.0 * magnitude;
}

int decimals_for(double step)
{
  return std::max(0, static_cast<int>(std::ceil(-std::log10(step) - 1e-9)));
}

} // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label))
{
}

void SvgPlot::add_series(std::string name, std::vector<double> xs, std::vector<double> ys,
                         std::string color, bool dashed)
{
  series_.push_back({std::move(name), std::move(xs), std::move(ys), std::move(color), dashed});
}

void SvgPlot::add_band(double x_low, double x_high) { bands_.emplace_back(x_low, x_high); }

void SvgPlot::set_y_range(double lo, double hi)
{
  fixed_y_ = true;
  y_lo_ = lo;
  y_hi_ = hi;
}

std::string SvgPlot::render() const
{
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = fixed_y_ ? y_lo_ : std::numeric_limits<double>::infinity();
  double y_hi = fixed_y_ ? y_hi_ : -std::numeric_limits<double>::infinity();
  for (const Series &s : series_)
  {
    for (double x : s.xs)
    {
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
    }
    if (!fixed_y_)
      for (double y : s.ys)
      {
        y_lo = std::min(y_lo, y);
        y_hi = std::max(y_hi, y);
      }
  }
  if (!(x_hi > x_lo))
  {
    x_lo = 0.0;
    x_hi = 1.0;
  }
  if (!(y_hi > y_lo))
  {
    y_lo -= 0.5;
    y_hi += 0.5;
  }

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  const auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"540\" "
       "viewBox=\"0 0 960 540\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"960\" height=\"540\" fill=\"white\"/>\n";
  o << "<text x=\"480\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">" << escape(title_)
    << "</text>\n";

  for (const auto &[lo, hi] : bands_)
  {
    const double a = px(std::clamp(lo, x_lo, x_hi));
    const double b = px(std::clamp(hi, x_lo, x_hi));
    o << "<rect x=\"" << fmt(a) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(b - a)
      << "\" height=\"" << fmt(plot_h) << "\" fill=\"#cccccc\" fill-opacity=\"0.5\"/>\n";
  }

  // Axes and ticks.
  o << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(plot_w)
    << "\" height=\"" << fmt(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
  const double x_step = nice_step(x_hi - x_lo, 8);
  for (double t = std::ceil(x_lo / x_step) * x_step; t <= x_hi + 1e-9 * x_step; t += x_step)
  {
    const double x = px(t);
    o << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kTop + plot_h) << "\" x2=\"" << fmt(x)
      << "\" y2=\"" << fmt(kTop + plot_h + 5) << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kTop + plot_h + 20)
      << "\" text-anchor=\"middle\">" << fmt(t, decimals_for(x_step)) << "</text>\n";
  }
  const double y_step = nice_step(y_hi - y_lo, 6);
  for (double t = std::ceil(y_lo / y_step) * y_step; t <= y_hi + 1e-9 * y_step; t += y_step)
  {
    const double y = py(t);
    o << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(kLeft)
      << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\">"
      << fmt(t, decimals_for(y_step)) << "</text>\n";
  }
  o << "<text x=\"" << fmt(kLeft + plot_w / 2) << "\" y=\"" << fmt(kHeight - 15)
    << "\" text-anchor=\"middle\">" << escape(x_label_) << "</text>\n";
  o << "<text x=\"20\" y=\"" << fmt(kTop + plot_h / 2) << "\" text-anchor=\"middle\" "
    << "transform=\"rotate(-90 20 " << fmt(kTop + plot_h / 2) << ")\">" << escape(y_label_)
    << "</text>\n";

  o << "<clipPath id=\"plot-area\"><rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop)
    << "\" width=\"" << fmt(plot_w) << "\" height=\"" << fmt(plot_h) << "\"/></clipPath>\n";
  for (std::size_t i = 0; i < series_.size(); ++i)
  {
    const Series &s = series_[i];
    o << "<polyline clip-path=\"url(#plot-area)\" fill=\"none\" stroke=\"" << s.color
      << "\" stroke-width=\"1.5\"";
    if (s.dashed)
      o << " stroke-dasharray=\"6 4\"";
    o << " points=\"";
    const std::size_t n = std::min(s.xs.size(), s.ys.size());
    for (std::size_t k = 0; k < n; ++k)
      o << (k ? " " : "") << fmt(px(s.xs[k])) << ',' << fmt(py(s.ys[k]));
    o << "\"/>\n";
    const double ly = kTop + 15 + 16 * static_cast<double>(i);
    o << "<line x1=\"" << fmt(kWidth - kRight - 170) << "\" y1=\"" << fmt(ly) << "\" x2=\""
      << fmt(kWidth - kRight - 145) << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << s.color
      << "\" stroke-width=\"2\"" << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
    o << "<text x=\"" << fmt(kWidth - kRight - 140) << "\" y=\"" << fmt(ly + 4) << "\">"
      << escape(s.name) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

} // namespace qpc::cli
