#include "abc/svg_chart.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <locale>
#include <sstream>
#include <utility>
#include <vector>

#include "abc/error.hpp"

namespace abc {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string fixed(double v, int decimals = 2) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, decimals);
  return {buf.data(), res.ptr};
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Round step of 1, 2 or 5 times a power of ten giving about `target` ticks.
double tick_step(double span, int target) {
  if (span <= 0.0) return 1.0;
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0})
    if (raw <= m * mag) return m * mag;
  return 10.0 * mag;
}

struct Series {
  int n;
  SweepParam kind;
  std::vector<std::pair<double, double>> points;
};

}  // namespace

std::string render_svg(std::span<const SweepRow> rows, const ChartSpec& spec) {
  if (rows.empty()) throw DomainError("render_svg: no rows to plot");

  std::vector<Series> series;
  double x_lo = rows.front().value, x_hi = x_lo;
  double y_lo = rows.front().abc_max, y_hi = y_lo;
  for (const auto& r : rows) {
    auto it = std::find_if(series.begin(), series.end(), [&](const Series& s) { return s.n == r.n && s.kind == r.kind; });
    if (it == series.end()) {
      series.push_back({r.n, r.kind, {}});
      it = std::prev(series.end());
    }
    it->points.emplace_back(r.value, r.abc_max);
    x_lo = std::min<double>(x_lo, r.value);
    x_hi = std::max<double>(x_hi, r.value);
    y_lo = std::min(y_lo, r.abc_max);
    y_hi = std::max(y_hi, r.abc_max);
  }
  // Degenerate ranges (a single row) get a unit window around the point.
  if (x_hi == x_lo) {
    x_lo -= 1.0;
    x_hi += 1.0;
  }
  if (y_hi == y_lo) {
    y_lo -= 1.0;
    y_hi += 1.0;
  }

  const double left = 80.0, right = 160.0, top = 50.0, bottom = 60.0;
  const double plot_w = spec.width - left - right;
  const double plot_h = spec.height - top - bottom;
  auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return top + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h; };

  std::ostringstream svg;
  svg.imbue(std::locale::classic());
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << fixed(left + plot_w / 2) << "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"16\">" << escape(spec.title) << "</text>\n";

  svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  const double xs = tick_step(x_hi - x_lo, 8);
  for (double t = std::ceil(x_lo / xs) * xs; t <= x_hi + 1e-9 * xs; t += xs) {
    svg << "<line x1=\"" << fixed(px(t)) << "\" y1=\"" << fixed(top) << "\" x2=\"" << fixed(px(t)) << "\" y2=\""
        << fixed(top + plot_h) << "\" stroke=\"#e0e0e0\"/>\n"
        << "<text x=\"" << fixed(px(t)) << "\" y=\"" << fixed(top + plot_h + 16) << "\" text-anchor=\"middle\">"
        << fixed(t, xs < 1.0 ? 2 : 0) << "</text>\n";
  }
  const double ys = tick_step(y_hi - y_lo, 6);
  for (double t = std::ceil(y_lo / ys) * ys; t <= y_hi + 1e-9 * ys; t += ys) {
    svg << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(py(t)) << "\" x2=\"" << fixed(left + plot_w)
        << "\" y2=\"" << fixed(py(t)) << "\" stroke=\"#e0e0e0\"/>\n"
        << "<text x=\"" << fixed(left - 6) << "\" y=\"" << fixed(py(t) + 4) << "\" text-anchor=\"end\">"
        << fixed(t, ys < 1.0 ? 2 : 0) << "</text>\n";
  }
  svg << "</g>\n";

  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top + plot_h) << "\" x2=\"" << fixed(left + plot_w)
      << "\" y2=\"" << fixed(top + plot_h) << "\"/>\n"
      << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top) << "\" x2=\"" << fixed(left) << "\" y2=\""
      << fixed(top + plot_h) << "\"/>\n"
      << "</g>\n";
  svg << "<text x=\"" << fixed(left + plot_w / 2) << "\" y=\"" << fixed(spec.height - 15.0)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << escape(spec.x_label)
      << "</text>\n"
      << "<text transform=\"translate(20 " << fixed(top + plot_h / 2) << ") rotate(-90)\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"13\">" << escape(spec.y_label) << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* color = kPalette[i % kPalette.size()];
    svg << "<polyline class=\"series\" data-n=\"" << s.n << "\" data-param=\"" << to_string(s.kind)
        << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t j = 0; j < s.points.size(); ++j) {
      if (j > 0) svg << ' ';
      svg << fixed(px(s.points[j].first)) << ',' << fixed(py(s.points[j].second));
    }
    svg << "\"/>\n";
    if (s.points.size() == 1) {
      svg << "<circle cx=\"" << fixed(px(s.points[0].first)) << "\" cy=\"" << fixed(py(s.points[0].second))
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    const double ly = top + 14.0 + 18.0 * static_cast<double>(i);
    const double lx = left + plot_w + 15.0;
    svg << "<line x1=\"" << fixed(lx) << "\" y1=\"" << fixed(ly) << "\" x2=\"" << fixed(lx + 20) << "\" y2=\""
        << fixed(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << fixed(lx + 26) << "\" y=\"" << fixed(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\">n=" << s.n << ", " << to_string(s.kind) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace abc
