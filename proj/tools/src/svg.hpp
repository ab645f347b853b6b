#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cli {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

// Minimal self-contained polyline chart: axes, tick labels, legend.
void write_line_chart(const std::string& path, const std::string& title,
                      const std::string& xlabel, const std::string& ylabel,
                      const std::vector<Series>& series);

}  // namespace cli
