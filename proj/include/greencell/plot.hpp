#pragma once

#include <string>
#include <vector>

namespace greencell {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 860;
  int height = 520;
};

// Minimal self-contained SVG line chart; every plot the CLI emits is backed
// by a CSV, the SVG is a derived convenience artifact.
void write_line_chart(const std::string& path, const std::vector<Series>& series,
                      const ChartOptions& options);

}  // namespace greencell
