#pragma once

#include <string>
#include <vector>

namespace cli {

// 17-significant-digit decimal formatting; round-trips double exactly.
std::string fmt17(double v);

// CSV table with a fixed header; rows are sorted before writing so output is
// independent of evaluation order.
class Table {
 public:
  explicit Table(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  // Lexicographic over the given columns; cells that parse fully as numbers
  // compare numerically, the rest compare as strings.
  void sort_by(const std::vector<int>& columns);
  void write_csv(const std::string& path) const;
  size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace cli
