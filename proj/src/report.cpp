#include "ramified/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

namespace ramified::report {
namespace {

std::string format_with(double value, int precision) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, precision);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

std::string escape_xml(std::string_view text) {
  std::string out;
  for (char c : text) {
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

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd",
                                                 "#8c564b", "#e377c2", "#7f7f7f", "#17becf"};

struct Frame {
  double width = 720, height = 480;
  double left = 80, right = 160, top = 40, bottom = 60;
  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  bool log_x = false;

  double px(double x) const {
    const double a = log_x ? std::log10(x) : x;
    const double lo = log_x ? std::log10(x_min) : x_min;
    const double hi = log_x ? std::log10(x_max) : x_max;
    return left + (a - lo) / (hi - lo) * (width - left - right);
  }
  double py(double y) const { return height - bottom - (y - y_min) / (y_max - y_min) * (height - top - bottom); }
};

std::vector<double> linear_ticks(double lo, double hi) {
  const double span = hi - lo;
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  }
  std::vector<double> ticks;
  for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * step; v += step) ticks.push_back(v);
  return ticks;
}

}  // namespace

std::string format_number(double value) { return format_with(value, 12); }

void CsvWriter::header(const std::vector<std::string_view>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out_ << ',';
    out_ << columns[i];
  }
  out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

void CsvWriter::comment(std::string_view text) { out_ << "# " << text << '\n'; }

namespace {

void write_panel(std::ostream& out, const PlotSpec& plot, double x_offset) {
  Frame f;
  f.log_x = plot.log_x;
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto& s : plot.series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      x_lo = std::min(x_lo, s.x[i]);
      x_hi = std::max(x_hi, s.x[i]);
      y_lo = std::min(y_lo, s.y[i]);
      y_hi = std::max(y_hi, s.y[i]);
    }
  }
  for (const auto& d : plot.dashed) {
    y_lo = std::min(y_lo, d.y);
    y_hi = std::max(y_hi, d.y);
  }
  if (!std::isfinite(x_lo)) x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
  if (x_hi == x_lo) x_hi = x_lo + 1;
  if (y_hi == y_lo) y_hi = y_lo + 1;
  const double pad = 0.05 * (y_hi - y_lo);
  f.x_min = x_lo;
  f.x_max = x_hi;
  f.y_min = y_lo - pad;
  f.y_max = y_hi + pad;

  out << "<svg x=\"" << x_offset << "\" y=\"0\" width=\"" << f.width << "\" height=\"" << f.height << "\">\n";
  out << "<text x=\"" << f.width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
      << escape_xml(plot.title) << "</text>\n";

  const double x0 = f.left, x1 = f.width - f.right, y0 = f.height - f.bottom, y1 = f.top;
  out << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0 << "\" height=\"" << y0 - y1
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  std::vector<double> xt;
  if (f.log_x) {
    for (double d = std::floor(std::log10(x_lo)); d <= std::ceil(std::log10(x_hi)); d += 1.0) {
      const double v = std::pow(10.0, d);
      if (v >= x_lo && v <= x_hi) xt.push_back(v);
    }
  } else {
    xt = linear_ticks(x_lo, x_hi);
  }
  for (double v : xt) {
    out << "<line x1=\"" << f.px(v) << "\" y1=\"" << y0 << "\" x2=\"" << f.px(v) << "\" y2=\"" << y0 + 5
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << f.px(v) << "\" y=\"" << y0 + 18 << "\" text-anchor=\"middle\">" << format_with(v, 4)
        << "</text>\n";
  }
  for (double v : linear_ticks(f.y_min, f.y_max)) {
    out << "<line x1=\"" << x0 - 5 << "\" y1=\"" << f.py(v) << "\" x2=\"" << x0 << "\" y2=\"" << f.py(v)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << x0 - 8 << "\" y=\"" << f.py(v) + 4 << "\" text-anchor=\"end\">" << format_with(v, 4)
        << "</text>\n";
  }
  out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << f.height - 18 << "\" text-anchor=\"middle\">"
      << escape_xml(plot.x_label) << "</text>\n";
  out << "<text x=\"18\" y=\"" << (y0 + y1) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << (y0 + y1) / 2 << ")\">" << escape_xml(plot.y_label) << "</text>\n";

  double legend_y = y1 + 10;
  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const auto& s = plot.series[k];
    const char* color = kPalette[k % kPalette.size()];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      out << format_with(f.px(s.x[i]), 6) << ',' << format_with(f.py(s.y[i]), 6) << ' ';
    }
    out << "\"/>\n";
    out << "<line x1=\"" << x1 + 12 << "\" y1=\"" << legend_y << "\" x2=\"" << x1 + 36 << "\" y2=\"" << legend_y
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << x1 + 42 << "\" y=\"" << legend_y + 4 << "\">" << escape_xml(s.label) << "</text>\n";
    legend_y += 18;
  }
  for (const auto& d : plot.dashed) {
    out << "<line x1=\"" << x0 << "\" y1=\"" << f.py(d.y) << "\" x2=\"" << x1 << "\" y2=\"" << f.py(d.y)
        << "\" stroke=\"red\" stroke-dasharray=\"6,4\"/>\n";
    out << "<line x1=\"" << x1 + 12 << "\" y1=\"" << legend_y << "\" x2=\"" << x1 + 36 << "\" y2=\"" << legend_y
        << "\" stroke=\"red\" stroke-dasharray=\"6,4\"/>\n";
    out << "<text x=\"" << x1 + 42 << "\" y=\"" << legend_y + 4 << "\">" << escape_xml(d.label) << "</text>\n";
    legend_y += 18;
  }
  out << "</svg>\n";
}

}  // namespace

void write_svg(std::ostream& out, const std::vector<PlotSpec>& panels) {
  constexpr double kPanelWidth = 720;
  constexpr double kPanelHeight = 480;
  const double width = kPanelWidth * static_cast<double>(std::max<std::size_t>(panels.size(), 1));
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << kPanelHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < panels.size(); ++i) write_panel(out, panels[i], kPanelWidth * static_cast<double>(i));
  out << "</svg>\n";
}

void write_svg(std::ostream& out, const PlotSpec& plot) { write_svg(out, std::vector<PlotSpec>{plot}); }

}  // namespace ramified::report
