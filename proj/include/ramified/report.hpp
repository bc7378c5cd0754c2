#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

// Output helpers for the command-line tool: locale-independent CSV and a
// minimal SVG line chart.

namespace ramified::report {

/// Shortest round-trip of `value` at 12 significant digits, '.' decimal,
/// independent of the global locale. NaN prints as "nan".
std::string format_number(double value);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string_view>& columns);
  void row(const std::vector<std::string>& cells);
  void comment(std::string_view text);

 private:
  std::ostream& out_;
};

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct ReferenceLine {
  std::string label;
  double y = 0.0;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  std::vector<Series> series;
  std::vector<ReferenceLine> dashed;
};

void write_svg(std::ostream& out, const PlotSpec& plot);

/// Several plots side by side in one document.
void write_svg(std::ostream& out, const std::vector<PlotSpec>& panels);

}  // namespace ramified::report
