#include "table.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace cli {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw std::logic_error("row width mismatch");
  rows_.push_back(std::move(cells));
}

namespace {

int compare_cells(const std::string& a, const std::string& b) {
  char* enda = nullptr;
  char* endb = nullptr;
  const double va = std::strtod(a.c_str(), &enda);
  const double vb = std::strtod(b.c_str(), &endb);
  const bool numa = enda == a.c_str() + a.size() && !a.empty();
  const bool numb = endb == b.c_str() + b.size() && !b.empty();
  if (numa && numb) return va < vb ? -1 : va > vb ? 1 : 0;
  return a < b ? -1 : a > b ? 1 : 0;
}

}  // namespace

void Table::sort_by(const std::vector<int>& columns) {
  std::stable_sort(rows_.begin(), rows_.end(),
                   [&columns](const std::vector<std::string>& a,
                              const std::vector<std::string>& b) {
                     for (int c : columns) {
                       const int cmp = compare_cells(a[c], b[c]);
                       if (cmp != 0) return cmp < 0;
                     }
                     return false;
                   });
}

void Table::write_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  const auto line = [&out](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(header_);
  for (const auto& row : rows_) line(row);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace cli
